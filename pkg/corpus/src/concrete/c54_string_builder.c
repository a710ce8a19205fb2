// symwasm: --args join these words with commas
#include <stdarg.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
typedef struct { char *s; size_t len, cap; } SB;
static void sb_appendf(SB *b, const char *fmt, ...) {
  va_list ap; va_start(ap, fmt);
  int n = vsnprintf(0, 0, fmt, ap); va_end(ap);
  if (b->len + n + 1 > b->cap) { b->cap = (b->len + n + 1) * 2; b->s = realloc(b->s, b->cap); }
  va_start(ap, fmt); vsnprintf(b->s + b->len, n + 1, fmt, ap); va_end(ap);
  b->len += n;
}
int main(int argc, char **argv) {
  SB b = {0};
  for (int i = 1; i < argc; i++) sb_appendf(&b, "%s%s", i > 1 ? ", " : "", argv[i]);
  sb_appendf(&b, " (%d items)", argc - 1);
  printf("%s\nlen=%zu\n", b.s, b.len);
  free(b.s);
  return 0;
}
