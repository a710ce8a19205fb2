// symwasm: --args 13 --stdin "Hello, World! abc XYZ"
#include <ctype.h>
#include <stdio.h>
#include <stdlib.h>
int main(int argc, char **argv) {
  int k = argc > 1 ? atoi(argv[1]) : 3, c;
  while ((c = getchar()) != EOF) {
    if (isupper(c)) c = 'A' + (c - 'A' + k) % 26;
    else if (islower(c)) c = 'a' + (c - 'a' + k) % 26;
    putchar(c);
  }
  putchar('\n');
  return 0;
}
