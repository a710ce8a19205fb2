// symwasm:
#include <stdio.h>
int main(void) {
  char buf[16];
  int n = snprintf(buf, sizeof buf, "%s-%d-%s", "abcdef", 123456, "xyz");
  printf("n=%d buf=%s\n", n, buf);
  n = snprintf(0, 0, "%08.3f", 3.14159);
  printf("need=%d\n", n);
  return 0;
}
