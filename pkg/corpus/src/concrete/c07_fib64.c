// symwasm:
#include <inttypes.h>
#include <stdio.h>
int main(void) {
  uint64_t a = 0, b = 1;
  for (int i = 0; i < 90; i++) { uint64_t t = a + b; a = b; b = t; }
  printf("fib(90)=%" PRIu64 " hex=%" PRIx64 "\n", a, a);
  return 0;
}
