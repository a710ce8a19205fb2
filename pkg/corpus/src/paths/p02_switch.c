// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  switch (c) {
  case 'a': puts("alpha"); return 1;
  case 'b': puts("bravo"); return 2;
  case 'c': puts("charlie"); return 3;
  case 'd': puts("delta"); return 4;
  case 'e': puts("echo"); return 5;
  case 'f': puts("foxtrot"); return 6;
  default: puts("other"); return 0;
  }
}
