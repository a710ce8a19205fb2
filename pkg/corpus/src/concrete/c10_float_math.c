// symwasm:
#include <math.h>
#include <stdio.h>
int main(void) {
  double x = 2.0;
  printf("sqrt2=%.6f\n", sqrt(x));
  printf("floor=%.1f ceil=%.1f trunc=%.1f\n", floor(-2.5), ceil(-2.5), trunc(-2.5));
  printf("pow=%.3f fabs=%.2f\n", pow(1.5, 3.0), fabs(-7.25));
  float f = 1.0f / 3.0f;
  printf("f=%.7f d=%.15f\n", f, 1.0 / 3.0);
  printf("g=%g e=%e\n", 123456.789, 0.000123);
  return 0;
}
