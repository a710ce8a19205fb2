// symwasm: --env MODE=fast --env LEVEL=3
#include <stdio.h>
#include <stdlib.h>
int main(void) {
  const char *m = getenv("MODE"), *l = getenv("LEVEL"), *x = getenv("MISSING");
  printf("MODE=%s LEVEL=%s MISSING=%s\n", m ? m : "(null)", l ? l : "(null)", x ? x : "(null)");
  return l ? atoi(l) : 0;
}
