// symwasm: --file "data.txt=line one\nline two\nline three\n"
#include <stdio.h>
int main(void) {
  FILE *f = fopen("data.txt", "r");
  if (!f) { puts("open failed"); return 1; }
  char line[64];
  int n = 0;
  while (fgets(line, sizeof line, f)) printf("%d: %s", ++n, line);
  fclose(f);
  printf("total %d\n", n);
  return 0;
}
