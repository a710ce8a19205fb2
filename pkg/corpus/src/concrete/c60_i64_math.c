// symwasm:
#include <inttypes.h>
#include <stdio.h>
int main(void) {
  volatile uint64_t a = 0xDEADBEEFCAFEBABEULL, b = 0x123456789ULL;
  printf("%016" PRIx64 " %016" PRIx64 "\n", a * b, a / b);
  printf("%016" PRIx64 " %016" PRIx64 "\n", a % b, (a << 13) | (a >> 51));
  volatile int64_t c = -0x7FFFFFFFFFFFLL, d = 977;
  printf("%" PRId64 " %" PRId64 " %" PRId64 "\n", c / d, c % d, c >> 9);
  printf("%d %d\n", (int32_t)a, (int)(c < (int64_t)b));
  return 0;
}
