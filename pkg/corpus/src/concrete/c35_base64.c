// symwasm: --stdin "Many hands make light work."
#include <stdio.h>
static const char tbl[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
int main(void) {
  unsigned char in[3];
  size_t n;
  while ((n = fread(in, 1, 3, stdin)) > 0) {
    unsigned v = in[0] << 16 | (n > 1 ? in[1] << 8 : 0) | (n > 2 ? in[2] : 0);
    putchar(tbl[v >> 18 & 63]);
    putchar(tbl[v >> 12 & 63]);
    putchar(n > 1 ? tbl[v >> 6 & 63] : '=');
    putchar(n > 2 ? tbl[v & 63] : '=');
  }
  putchar('\n');
  return 0;
}
