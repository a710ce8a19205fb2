// symwasm: -s --sym_stdin 1
#include <stdio.h>
#include <unistd.h>

int main(void) {
  unsigned char c = 0;
  read(0, &c, 1);
  if (c < 64) {
    if (c < 16) { puts("tiny"); return 1; }
    puts("small");
    return 2;
  } else if (c < 192) {
    if (c & 1) { puts("odd middle"); return 3; }
    puts("even middle");
    return 4;
  }
  puts("large");
  return 5;
}
