// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  unsigned s = 0;
  for (int i = 0; i < 5; i++) s += (c + i) & 3;
  if (s == 7) { puts("seven"); return 1; }
  return s > 7 ? 2 : 0;
}
