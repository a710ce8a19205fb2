// symwasm: --file "blob=0123456789abcdef"
#include <fcntl.h>
#include <stdio.h>
#include <unistd.h>
int main(void) {
  int fd = open("blob", O_RDONLY);
  if (fd < 0) return 1;
  char b[5] = {0};
  lseek(fd, 10, SEEK_SET);
  read(fd, b, 4);
  printf("at 10: %s\n", b);
  off_t end = lseek(fd, 0, SEEK_END);
  lseek(fd, -3, SEEK_CUR);
  int n = read(fd, b, 4);
  b[n] = 0;
  printf("size=%lld tail=%s n=%d\n", (long long)end, b, n);
  close(fd);
  return 0;
}
