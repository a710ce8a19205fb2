// symwasm:
#include <stdio.h>
#include <string.h>
int main(void) {
  char buf[64];
  strcpy(buf, "symbolic");
  strcat(buf, "-");
  strncat(buf, "execution engine", 9);
  printf("%s len=%zu\n", buf, strlen(buf));
  printf("cmp=%d %d %d\n", strcmp("abc", "abd") < 0, strcmp("b", "a") > 0, strncmp("hello", "help", 3));
  char *p = strchr(buf, '-');
  printf("after dash: %s\n", p + 1);
  printf("strstr: %s\n", strstr(buf, "exec") ? "yes" : "no");
  return 0;
}
