// symwasm: --args 3.25 -1000.5 0x1p4 inf
#include <stdio.h>
#include <stdlib.h>
int main(int argc, char **argv) {
  double s = 0;
  for (int i = 1; i < argc; i++) {
    double v = strtod(argv[i], 0);
    printf("%s=%g\n", argv[i], v);
    s += v;
  }
  printf("sum=%g\n", s);
  return 0;
}
