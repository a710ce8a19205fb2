// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  volatile int d = (int)c - 7;
  int q = 100 / d;
  if (q > 10) { puts("big"); return 1; }
  if (q < 0) { puts("negative"); return 2; }
  return 0;
}
