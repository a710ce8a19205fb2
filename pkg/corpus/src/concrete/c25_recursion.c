// symwasm:
#include <stdio.h>
static int ack(int m, int n) {
  if (m == 0) return n + 1;
  if (n == 0) return ack(m - 1, 1);
  return ack(m - 1, ack(m, n - 1));
}
static unsigned long long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }
int main(void) {
  printf("ack(2,3)=%d\n", ack(2, 3));
  printf("20!=%llu\n", fact(20));
  return 0;
}
