// symwasm:
#include <errno.h>
#include <stdio.h>
#include <string.h>
int main(void) {
  FILE *f = fopen("does-not-exist", "r");
  if (f) { puts("unexpected"); return 1; }
  printf("errno=%d %s\n", errno, errno == ENOENT ? "ENOENT" : "other");
  return 0;
}
