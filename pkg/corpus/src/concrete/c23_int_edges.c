// symwasm:
#include <limits.h>
#include <stdio.h>
int main(void) {
  volatile int a = INT_MIN, b = -1, c = 7, d = -3;
  printf("%d %d %d %d\n", c / d, c % d, -c / 2, -c % 2);
  printf("%d %u\n", a / 2, (unsigned)a / 3u);
  volatile long long e = LLONG_MIN, f = 3;
  printf("%lld %lld\n", e / f, e % f);
  printf("%d\n", (int)(unsigned char)(a >> 24));
  printf("%d %d\n", b >> 1, (int)((unsigned)b >> 1));
  return 0;
}
