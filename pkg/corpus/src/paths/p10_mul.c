// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  unsigned char h = (unsigned char)(c * 37 + 11);
  if (h == 5) { puts("found"); return 1; }
  if (h < 20) return 2;
  return 0;
}
