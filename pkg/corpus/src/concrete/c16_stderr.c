// symwasm:
#include <stdio.h>
int main(void) {
  fprintf(stderr, "warning: %s\n", "to stderr");
  printf("stdout line\n");
  fprintf(stderr, "code %d\n", 3);
  return 3;
}
