// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  signed char c = 0;
  read(0, &c, 1);
  int x = c;
  if (x < -100) { puts("very negative"); return 1; }
  if (x < 0) return 2;
  if (x > 100) { puts("very positive"); return 3; }
  return 0;
}
