// symwasm: --args 17 4 99
#include <stdio.h>
#include <stdlib.h>
static int cmp(const void *a, const void *b) { return *(const int *)a - *(const int *)b; }
int main(int argc, char **argv) {
  static const int v[] = {1, 3, 4, 8, 11, 17, 23, 42, 57, 99};
  for (int i = 1; i < argc; i++) {
    int key = atoi(argv[i]);
    const int *p = bsearch(&key, v, 10, sizeof v[0], cmp);
    printf("%d: %s", key, p ? "found at " : "missing\n");
    if (p) printf("%d\n", (int)(p - v));
  }
  return 0;
}
