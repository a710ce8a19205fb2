// symwasm:
#include <stdio.h>
#include <stdlib.h>
static int cmp(const void *a, const void *b) { return *(const int *)a - *(const int *)b; }
int main(void) {
  int v[20];
  unsigned x = 12345;
  for (int i = 0; i < 20; i++) { x = x * 1103515245u + 12345u; v[i] = (x >> 16) % 1000; }
  qsort(v, 20, sizeof v[0], cmp);
  for (int i = 0; i < 20; i++) printf("%d%c", v[i], i == 19 ? '\n' : ' ');
  return 0;
}
