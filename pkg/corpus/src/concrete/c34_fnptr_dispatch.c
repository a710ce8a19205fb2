// symwasm: --args add 6 7 mul 6 7 sub 6 7 div 42 5 mod 42 5
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
typedef long (*op_fn)(long, long);
static long add(long a, long b) { return a + b; }
static long sub(long a, long b) { return a - b; }
static long mul(long a, long b) { return a * b; }
static long dv(long a, long b) { return a / b; }
static long md(long a, long b) { return a % b; }
static const struct { const char *n; op_fn f; } ops[] = {
  {"add", add}, {"sub", sub}, {"mul", mul}, {"div", dv}, {"mod", md}};
int main(int argc, char **argv) {
  for (int i = 1; i + 2 < argc; i += 3)
    for (unsigned k = 0; k < sizeof ops / sizeof ops[0]; k++)
      if (!strcmp(ops[k].n, argv[i]))
        printf("%s(%s,%s)=%ld\n", argv[i], argv[i + 1], argv[i + 2],
               ops[k].f(atol(argv[i + 1]), atol(argv[i + 2])));
  return 0;
}
