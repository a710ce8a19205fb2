// symwasm:
#include <stdio.h>
#define N 5
typedef struct { int buf[N]; int head, count; long overwritten; } Ring;
static void put(Ring *r, int v) {
  if (r->count == N) { r->overwritten++; r->head = (r->head + 1) % N; r->count--; }
  r->buf[(r->head + r->count++) % N] = v;
}
static int get(Ring *r, int *v) { if (!r->count) return 0; *v = r->buf[r->head]; r->head = (r->head + 1) % N; r->count--; return 1; }
int main(void) {
  Ring r = {{0}, 0, 0, 0};
  int v;
  for (int i = 1; i <= 8; i++) put(&r, i * 11);
  get(&r, &v); printf("first=%d\n", v);
  put(&r, 99);
  while (get(&r, &v)) printf("%d ", v);
  printf("\noverwritten=%ld\n", r.overwritten);
  return 0;
}
