// symwasm: -s --sym_stdin 2
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char b[2] = {0, 0};
  read(0, b, 2);
  unsigned x = b[0] | (b[1] << 8);
  if (x == 0x1234) { puts("magic"); return 7; }
  if (x > 60000) { puts("huge"); return 3; }
  if ((x & 0xff) == (x >> 8)) { puts("twin"); return 2; }
  return 0;
}
