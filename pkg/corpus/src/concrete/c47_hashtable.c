// symwasm: --stdin "the cat and the dog and the bird saw a cat\n"
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
typedef struct entry { char *key; int count; struct entry *next; } Entry;
typedef struct { Entry **buckets; unsigned cap, size; } Table;
static unsigned hash(const char *s) { unsigned h = 5381; while (*s) h = h * 33 + (unsigned char)*s++; return h; }
static void rehash(Table *t) {
  unsigned nc = t->cap * 2;
  Entry **nb = calloc(nc, sizeof *nb);
  for (unsigned i = 0; i < t->cap; i++)
    for (Entry *e = t->buckets[i], *n; e; e = n) { n = e->next; unsigned b = hash(e->key) % nc; e->next = nb[b]; nb[b] = e; }
  free(t->buckets); t->buckets = nb; t->cap = nc;
}
static void add(Table *t, const char *k) {
  unsigned b = hash(k) % t->cap;
  for (Entry *e = t->buckets[b]; e; e = e->next) if (!strcmp(e->key, k)) { e->count++; return; }
  Entry *e = malloc(sizeof *e); e->key = strdup(k); e->count = 1; e->next = t->buckets[b]; t->buckets[b] = e;
  if (++t->size * 4 > t->cap * 3) rehash(t);
}
static int get(Table *t, const char *k) {
  for (Entry *e = t->buckets[hash(k) % t->cap]; e; e = e->next) if (!strcmp(e->key, k)) return e->count;
  return 0;
}
int main(void) {
  Table t = {calloc(4, sizeof(Entry *)), 4, 0};
  char w[32];
  while (scanf("%31s", w) == 1) add(&t, w);
  printf("distinct=%u cap=%u\n", t.size, t.cap);
  const char *q[] = {"the", "cat", "and", "fish", "a"};
  for (int i = 0; i < 5; i++) printf("%s=%d\n", q[i], get(&t, q[i]));
  return 0;
}
