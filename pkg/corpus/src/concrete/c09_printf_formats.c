// symwasm:
#include <stdio.h>
int main(void) {
  printf("[%5d] [%-5d] [%05d] [%+d]\n", 42, 42, 42, 42);
  printf("[%x] [%X] [%o] [%#x]\n", 48879, 48879, 8, 255);
  printf("[%s] [%10s] [%-10s] [%.3s]\n", "abc", "right", "left", "truncate");
  printf("[%c%c%c] [%%] [%u]\n", 'W', 'A', 'S', 4000000000u);
  printf("[%ld] [%lld]\n", -123456789L, -9000000000000LL);
  return 0;
}
