// symwasm:
#include <stdio.h>
#include <string.h>
int main(void) {
  FILE *f = fopen("out.txt", "w");
  if (!f) { puts("cannot create"); return 1; }
  fprintf(f, "value=%d\n", 1234);
  fputs("tail\n", f);
  fclose(f);
  f = fopen("out.txt", "r");
  if (!f) return 2;
  char buf[64] = {0};
  size_t n = fread(buf, 1, sizeof buf - 1, f);
  fclose(f);
  printf("read %zu: %s", n, buf);
  return 0;
}
