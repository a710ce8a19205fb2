// symwasm: -s --sym_stdin 2
#include <stdio.h>
#include <unistd.h>

int main(void) {
  char b[2] = {0, 0};
  read(0, b, 2);
  if (b[0] == 'o') {
    if (b[1] == 'k') { puts("ok!"); return 0; }
    puts("o?");
    return 2;
  }
  return 1;
}
