// symwasm: --args 27
#include <stdio.h>
#include <stdlib.h>
int main(int argc, char **argv) {
  unsigned long n = argc > 1 ? strtoul(argv[1], 0, 10) : 7;
  int steps = 0;
  unsigned long peak = n;
  while (n != 1) { n = (n & 1) ? 3 * n + 1 : n / 2; if (n > peak) peak = n; steps++; }
  printf("steps=%d peak=%lu\n", steps, peak);
  return steps & 0xff;
}
