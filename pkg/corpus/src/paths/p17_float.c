// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  double d = (double)c / 3.0;
  if (d > 80.5) { puts("high"); return 1; }
  if (d == 10.0) { puts("ten"); return 2; }
  return 0;
}
