// symwasm: -s --sym_stdin 2
#include <stdio.h>
#include <string.h>
#include <unistd.h>

int main(void) {
  char b[3] = {0, 0, 0};
  read(0, b, 2);
  int r = strcmp(b, "hi");
  if (r == 0) { puts("greeting"); return 0; }
  return r < 0 ? 1 : 2;
}
