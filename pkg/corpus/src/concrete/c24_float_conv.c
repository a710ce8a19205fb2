// symwasm:
#include <stdio.h>
int main(void) {
  volatile double d = -123.75;
  volatile float f = 3.5e9f;
  printf("%d %u %lld\n", (int)d, (unsigned)f, (long long)(d * 1e6));
  printf("%.2f %.2f\n", (double)(int)-7.9, (double)(unsigned)7.9);
  volatile int i = -5;
  volatile unsigned u = 4000000000u;
  printf("%.1f %.1f\n", (double)i, (double)u);
  printf("%.3f\n", (float)(double)0.1);
  return 0;
}
