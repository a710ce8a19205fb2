// symwasm: -s --sym_stdin 2
#include <stdio.h>
#include <string.h>
#include <unistd.h>

int main(void) {
  char in[2] = {0, 0};
  char buf[8];
  read(0, in, 2);
  memset(buf, '-', sizeof buf);
  memcpy(buf + 3, in, 2);
  if (buf[3] == 'q' && buf[4] == buf[0]) { puts("q-"); return 1; }
  if (buf[4] == 'z') return 2;
  return 0;
}
