// symwasm: --file "log.txt=first\n"
#include <stdio.h>
int main(void) {
  FILE *f = fopen("log.txt", "a");
  if (!f) return 1;
  fputs("second\n", f);
  fclose(f);
  f = fopen("log.txt", "r");
  int c;
  while ((c = fgetc(f)) != EOF) putchar(c);
  fclose(f);
  return 0;
}
