// symwasm: --args 10 -20 300 abc 7x
#include <stdio.h>
#include <stdlib.h>
int main(int argc, char **argv) {
  long sum = 0;
  for (int i = 1; i < argc; i++) {
    char *end;
    long v = strtol(argv[i], &end, 10);
    printf("%s -> %ld%s\n", argv[i], v, *end ? " (partial)" : "");
    sum += v;
  }
  printf("sum=%ld\n", sum);
  return 0;
}
