// symwasm: -s --sym_files 1 1
#include <fcntl.h>
#include <stdio.h>
#include <unistd.h>

int main(void) {
  int fd = open("A", O_RDONLY);
  if (fd < 0) { puts("no file"); return 9; }
  unsigned char c = 0;
  int n = read(fd, &c, 1);
  close(fd);
  if (n != 1) return 8;
  if (c == '#') { puts("comment"); return 1; }
  if (c >= '0' && c <= '9') { puts("digit"); return 2; }
  return 0;
}
