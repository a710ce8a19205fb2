// symwasm:
#include <stdio.h>
#include <stdlib.h>
static void bye(void) { puts("atexit handler"); }
int main(void) {
  atexit(bye);
  puts("calling exit");
  exit(42);
}
