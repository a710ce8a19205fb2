// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  volatile unsigned char *p = (volatile unsigned char *)((unsigned)c << 14);
  unsigned char v = *p;
  if (v == 0) { puts("zero"); return 0; }
  return 1;
}
