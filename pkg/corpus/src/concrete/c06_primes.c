// symwasm:
#include <stdio.h>
#include <string.h>
int main(void) {
  static char sieve[2000];
  int count = 0, last = 0;
  memset(sieve, 1, sizeof sieve);
  for (int i = 2; i < 2000; i++) {
    if (!sieve[i]) continue;
    count++; last = i;
    for (int j = i * i; j < 2000; j += i) sieve[j] = 0;
  }
  printf("%d primes below 2000, largest %d\n", count, last);
  return count % 256;
}
