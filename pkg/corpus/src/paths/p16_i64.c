// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  unsigned long long x = (unsigned long long)c * 0x100000001ULL;
  x ^= x >> 7;
  if ((x >> 32) == 0xAB) { puts("ab"); return 1; }
  if (x > 0x7000000000ULL) return 2;
  return 0;
}
