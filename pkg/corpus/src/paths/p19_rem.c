// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  volatile int seven = 7;
  switch ((int)c % seven) {
  case 0: puts("zero"); return 1;
  case 3: puts("three"); return 2;
  default: return 0;
  }
}
