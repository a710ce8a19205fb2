// symwasm: --args 5 -2 9 14 3 0 7
#include <stdio.h>
#include <stdlib.h>
typedef struct { int *buf; size_t size, cap; } Array;
static void array_add(Array *a, int v) {
  if (a->size == a->cap) { a->cap = a->cap ? a->cap * 2 : 2; a->buf = realloc(a->buf, a->cap * sizeof(int)); }
  a->buf[a->size++] = v;
}
static void array_remove_at(Array *a, size_t i) {
  for (; i + 1 < a->size; i++) a->buf[i] = a->buf[i + 1];
  a->size--;
}
static void array_insert_at(Array *a, size_t i, int v) {
  array_add(a, 0);
  for (size_t k = a->size - 1; k > i; k--) a->buf[k] = a->buf[k - 1];
  a->buf[i] = v;
}
static void show(const Array *a) {
  printf("[");
  for (size_t i = 0; i < a->size; i++) printf(i ? ", %d" : "%d", a->buf[i]);
  printf("] size=%zu cap=%zu\n", a->size, a->cap);
}
int main(int argc, char **argv) {
  Array a = {0};
  for (int i = 1; i < argc; i++) array_add(&a, atoi(argv[i]));
  show(&a);
  array_remove_at(&a, 1);
  array_insert_at(&a, 0, 100);
  show(&a);
  free(a.buf);
  return 0;
}
