// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

static int add(int x) { return x + 1; }
static int dbl(int x) { return x * 2; }
static int neg(int x) { return -x; }
static int sq(int x) { return x * x; }

int (*volatile ops[4])(int) = {add, dbl, neg, sq};

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  int r = ops[c & 3](5);
  if (r == 6) { puts("add"); return 1; }
  if (r == 10) { puts("dbl"); return 2; }
  if (r < 0) { puts("neg"); return 3; }
  puts("sq");
  return 4;
}
