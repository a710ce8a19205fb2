// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  if ((c ^ 0x5a) == 42) __builtin_trap();
  if (c > 200) { puts("fine"); return 1; }
  return 0;
}
