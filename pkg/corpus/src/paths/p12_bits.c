// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  unsigned x = c;
  unsigned r = (x << 3) | (x >> 5);
  r &= 0xff;
  if (__builtin_popcount(x) == 8) { puts("all ones"); return 8; }
  if (r == 0x81) { puts("rot"); return 1; }
  if (__builtin_clz(x | 1) == 31) return 2;
  return 0;
}
