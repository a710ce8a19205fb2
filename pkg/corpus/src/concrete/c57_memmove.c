// symwasm:
#include <stdio.h>
#include <string.h>
int main(void) {
  char s[32] = "abcdefghijklmnop";
  memmove(s + 4, s, 8);
  printf("%s\n", s);
  memmove(s, s + 6, 8);
  printf("%s\n", s);
  printf("memcmp=%d %d\n", memcmp("abc", "abd", 3) < 0, memcmp("same", "same", 4));
  char *p = memchr(s, 'k', sizeof s);
  printf("memchr=%d\n", p ? (int)(p - s) : -1);
  return 0;
}
