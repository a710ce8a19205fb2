// symwasm: -s --sym_stdin 1
#include <stdio.h>

int main(void) {
  int c = getchar();
  if (c == EOF) return 9;
  if (c == '\n') { puts("newline"); return 1; }
  if (c >= 'A' && c <= 'Z') { printf("upper\n"); return 2; }
  return 0;
}
