// symwasm:
#include <stdint.h>
#include <stdio.h>
typedef struct { uint64_t w[4]; } Bits;
static void set(Bits *b, int i) { b->w[i >> 6] |= 1ULL << (i & 63); }
static int test(const Bits *b, int i) { return b->w[i >> 6] >> (i & 63) & 1; }
static int card(const Bits *b) { int n = 0; for (int i = 0; i < 4; i++) n += __builtin_popcountll(b->w[i]); return n; }
int main(void) {
  Bits a = {{0}}, m = {{0}};
  for (int i = 0; i < 256; i += 3) set(&a, i);
  for (int i = 0; i < 256; i += 5) set(&m, i);
  Bits both, either;
  for (int i = 0; i < 4; i++) { both.w[i] = a.w[i] & m.w[i]; either.w[i] = a.w[i] | m.w[i]; }
  printf("a=%d m=%d and=%d or=%d t150=%d t151=%d\n", card(&a), card(&m), card(&both), card(&either), test(&both, 150), test(&both, 151));
  printf("%016llx\n", (unsigned long long)either.w[1]);
  return 0;
}
