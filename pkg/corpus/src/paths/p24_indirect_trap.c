// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

static int one(void) { return 1; }
static int two(void) { return 2; }
static int three(void) { return 3; }

int (*volatile fns[3])(void) = {one, two, three};

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  unsigned i = c & 7;
  int (*f)(void) = i < 3 ? fns[i] : (int (*)(void))(unsigned long)(i + 1000);
  int r = f();
  if (r == 2) puts("two");
  return r;
}
