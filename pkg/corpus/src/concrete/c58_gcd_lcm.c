// symwasm: --args 462 1071 84 36
#include <stdio.h>
#include <stdlib.h>
static unsigned long gcd(unsigned long a, unsigned long b) { while (b) { unsigned long t = a % b; a = b; b = t; } return a; }
int main(int argc, char **argv) {
  unsigned long g = 0, l = 1;
  for (int i = 1; i < argc; i++) { unsigned long v = strtoul(argv[i], 0, 10); g = gcd(g, v); l = l / gcd(l, v) * v; }
  printf("gcd=%lu lcm=%lu\n", g, l);
  return 0;
}
