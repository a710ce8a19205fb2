// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  volatile unsigned char buf[8] = {0};
  read(0, &c, 1);
  buf[c & 7] = 1;
  if (buf[3]) { puts("hit three"); return 3; }
  if (buf[0] | buf[7]) { puts("edge"); return 1; }
  return 0;
}
