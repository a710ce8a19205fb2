// symwasm: -s --sym_args 1
#include <stdio.h>

int main(int argc, char **argv) {
  if (argc < 2) return 9;
  char c = argv[1][0];
  if (c == 'x') { puts("x marks"); return 1; }
  if (c == 0) { puts("empty"); return 2; }
  return 0;
}
