// symwasm:
#include <stdio.h>
#include <stdlib.h>
typedef struct { int *buf; unsigned cap, first, size; } Deque;
static void grow(Deque *d) {
  unsigned nc = d->cap ? d->cap * 2 : 4;
  int *nb = malloc(nc * sizeof(int));
  for (unsigned i = 0; i < d->size; i++) nb[i] = d->buf[(d->first + i) % d->cap];
  free(d->buf); d->buf = nb; d->cap = nc; d->first = 0;
}
static void add_first(Deque *d, int v) {
  if (d->size == d->cap) grow(d);
  d->first = (d->first + d->cap - 1) % d->cap; d->buf[d->first] = v; d->size++;
}
static void add_last(Deque *d, int v) {
  if (d->size == d->cap) grow(d);
  d->buf[(d->first + d->size++) % d->cap] = v;
}
static int remove_first(Deque *d) { int v = d->buf[d->first]; d->first = (d->first + 1) % d->cap; d->size--; return v; }
static int remove_last(Deque *d) { return d->buf[(d->first + --d->size) % d->cap]; }
int main(void) {
  Deque d = {0};
  for (int i = 0; i < 10; i++) { if (i & 1) add_first(&d, i); else add_last(&d, i * 10); }
  printf("cap=%u:", d.cap);
  for (unsigned i = 0; i < d.size; i++) printf(" %d", d.buf[(d.first + i) % d.cap]);
  printf("\nfirst=%d last=%d", remove_first(&d), remove_last(&d));
  printf(" size=%u\n", d.size);
  free(d.buf);
  return 0;
}
