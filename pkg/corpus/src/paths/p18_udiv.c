// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  volatile unsigned ten = 10;
  unsigned q = c / ten;
  if (q == 7) { puts("seventy"); return 7; }
  if (q > 20) return 2;
  return 0;
}
