// symwasm: -s --sym_stdin 1
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  switch (c >> 4) {
  case 0: return 10;
  case 1: return 11;
  case 2: return 12;
  case 3: return 13;
  case 5: return 15;
  case 8: return 18;
  case 9: return 19;
  case 12: return 22;
  default: return 1;
  }
}
