// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  int a = c > 100 ? 7 : 3;
  int b = (c & 1) ? a * 2 : a;
  if (b == 14) { puts("odd and big"); return 1; }
  if (b == 7) return 2;
  return 0;
}
