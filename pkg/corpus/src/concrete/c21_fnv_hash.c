// symwasm: --args apple banana cherry
#include <stdint.h>
#include <stdio.h>
static uint64_t fnv1a(const char *s) {
  uint64_t h = 1469598103934665603ULL;
  while (*s) { h ^= (unsigned char)*s++; h *= 1099511628211ULL; }
  return h;
}
int main(int argc, char **argv) {
  for (int i = 1; i < argc; i++) printf("%s %016llx\n", argv[i], (unsigned long long)fnv1a(argv[i]));
  return 0;
}
