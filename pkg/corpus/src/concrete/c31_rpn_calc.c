// symwasm: --stdin "3 4 + 2 * 7 -\n10 2 8 * + 3 -\n5 0 /\n"
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
int main(void) {
  char line[256];
  while (fgets(line, sizeof line, stdin)) {
    long st[32]; int sp = 0, err = 0;
    for (char *t = strtok(line, " \n"); t; t = strtok(0, " \n")) {
      if (strchr("+-*/", t[0]) && t[1] == 0) {
        if (sp < 2) { err = 1; break; }
        long b = st[--sp], a = st[--sp];
        if (t[0] == '/' && b == 0) { err = 2; break; }
        st[sp++] = t[0] == '+' ? a + b : t[0] == '-' ? a - b : t[0] == '*' ? a * b : a / b;
      } else st[sp++] = atol(t);
    }
    if (err) printf("error %d\n", err); else printf("%ld\n", st[sp - 1]);
  }
  return 0;
}
