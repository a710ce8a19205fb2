// symwasm: --stdin "1 2 3 1 4 5 2 1 3 6 1"
#include <stdio.h>
#define CAP 3
int main(void) {
  int keys[CAP], age[CAP], n = 0, clock = 0, hits = 0, misses = 0, k;
  while (scanf("%d", &k) == 1) {
    int i;
    for (i = 0; i < n && keys[i] != k; i++) ;
    clock++;
    if (i < n) { hits++; age[i] = clock; printf("hit %d\n", k); continue; }
    misses++;
    if (n < CAP) i = n++;
    else { i = 0; for (int j = 1; j < CAP; j++) if (age[j] < age[i]) i = j; printf("evict %d\n", keys[i]); }
    keys[i] = k; age[i] = clock;
  }
  printf("hits=%d misses=%d\n", hits, misses);
  return 0;
}
