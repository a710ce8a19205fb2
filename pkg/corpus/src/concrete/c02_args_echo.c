// symwasm: --args alpha "two words" x-ray
#include <stdio.h>
int main(int argc, char **argv) {
  printf("argc=%d\n", argc);
  for (int i = 1; i < argc; i++) printf("[%d] %s\n", i, argv[i]);
  return argc;
}
