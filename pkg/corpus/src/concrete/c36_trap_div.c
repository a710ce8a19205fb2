// symwasm: --args 0
#include <stdio.h>
#include <stdlib.h>
int main(int argc, char **argv) {
  volatile int d = argc > 1 ? atoi(argv[1]) : 1;
  puts("before");
  fflush(stdout);
  printf("%d\n", 100 / d);
  return 0;
}
