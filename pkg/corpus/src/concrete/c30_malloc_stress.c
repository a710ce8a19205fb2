// symwasm:
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
int main(void) {
  void *p[64];
  size_t total = 0;
  for (int i = 0; i < 64; i++) { p[i] = malloc(16 + i * 37); memset(p[i], i, 16); total += 16 + i * 37; }
  for (int i = 0; i < 64; i += 2) free(p[i]);
  for (int i = 0; i < 64; i += 2) p[i] = calloc(1, 100);
  int ok = 1;
  for (int i = 1; i < 64; i += 2) ok &= ((unsigned char *)p[i])[5] == i;
  for (int i = 0; i < 64; i += 2) ok &= ((unsigned char *)p[i])[99] == 0;
  p[1] = realloc(p[1], 5000);
  ok &= ((unsigned char *)p[1])[15] == 1;
  for (int i = 0; i < 64; i++) free(p[i]);
  printf("total=%zu ok=%d\n", total, ok);
  return !ok;
}
