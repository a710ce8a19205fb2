// symwasm: --args 4 8 15 16 23 42 8 15 99 4
#include <stdio.h>
#include <stdlib.h>
#define CAP 32
typedef struct { int keys[CAP]; char used[CAP]; int size; } Set;
static int slot(const Set *s, int k) { unsigned i = (unsigned)k * 2654435761u % CAP; while (s->used[i] && s->keys[i] != k) i = (i + 1) % CAP; return i; }
static int set_add(Set *s, int k) { int i = slot(s, k); if (s->used[i]) return 0; s->used[i] = 1; s->keys[i] = k; s->size++; return 1; }
static int contains(const Set *s, int k) { return s->used[slot(s, k)]; }
int main(int argc, char **argv) {
  Set s = {{0}, {0}, 0};
  for (int i = 1; i < argc; i++) printf("%s%s", set_add(&s, atoi(argv[i])) ? "+" : "=", i + 1 < argc ? " " : "\n");
  printf("size=%d has16=%d has17=%d\n", s.size, contains(&s, 16), contains(&s, 17));
  return s.size;
}
