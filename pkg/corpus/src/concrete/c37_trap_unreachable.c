// symwasm:
#include <stdio.h>
int main(void) {
  fputs("about to abort\n", stderr);
  __builtin_trap();
}
