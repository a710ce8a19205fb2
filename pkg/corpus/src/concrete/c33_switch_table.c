// symwasm: --args 0 3 7 12 255
#include <stdio.h>
#include <stdlib.h>
static const char *name(int d) {
  switch (d) {
  case 0: return "zero"; case 1: return "one"; case 2: return "two"; case 3: return "three";
  case 4: return "four"; case 5: return "five"; case 6: return "six"; case 7: return "seven";
  case 8: return "eight"; case 9: return "nine"; case 10: return "ten";
  default: return "many";
  }
}
int main(int argc, char **argv) {
  for (int i = 1; i < argc; i++) printf("%s\n", name(atoi(argv[i])));
  return 0;
}
