// symwasm: --file "scores.csv=carol,88\nalice,92\nbob,75\nalice,81\ndave,99\nbob,64\n"
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
typedef struct mn { char key[16]; int sum, n; struct mn *l, *r; } MNode;
static MNode *put(MNode *t, const char *k, int v) {
  if (!t) { t = calloc(1, sizeof *t); strncpy(t->key, k, 15); }
  int c = strcmp(k, t->key);
  if (c < 0) t->l = put(t->l, k, v); else if (c > 0) t->r = put(t->r, k, v); else { t->sum += v; t->n++; }
  return t;
}
static void dump(MNode *t) { if (!t) return; dump(t->l); printf("%-6s n=%d avg=%d\n", t->key, t->n, t->sum / t->n); dump(t->r); }
int main(void) {
  FILE *f = fopen("scores.csv", "r");
  if (!f) return 1;
  char line[64], name[16]; int v; MNode *root = 0;
  while (fgets(line, sizeof line, f)) if (sscanf(line, "%15[^,],%d", name, &v) == 2) root = put(root, name, v);
  fclose(f);
  dump(root);
  return 0;
}
