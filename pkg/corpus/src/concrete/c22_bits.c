// symwasm:
#include <stdint.h>
#include <stdio.h>
int main(void) {
  uint32_t v[] = {0, 1, 0x80000000u, 0xF0F0F0F0u, 12345678};
  for (int i = 0; i < 5; i++) {
    uint32_t x = v[i];
    printf("%08x clz=%d ctz=%d pop=%d rotl=%08x\n", x, x ? __builtin_clz(x) : 32,
           x ? __builtin_ctz(x) : 32, __builtin_popcount(x), (x << 7) | (x >> 25));
  }
  uint64_t y = 0x0123456789ABCDEFULL;
  printf("%d %d %d\n", __builtin_clzll(y), __builtin_ctzll(y), __builtin_popcountll(y));
  return 0;
}
