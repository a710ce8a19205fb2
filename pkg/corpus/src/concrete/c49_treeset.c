// symwasm: --stdin "50 30 70 20 40 60 80 35 45 65 30 70"
#include <stdio.h>
#include <stdlib.h>
typedef struct tn { int key; struct tn *l, *r; } TNode;
static TNode *insert(TNode *t, int k, int *added) {
  if (!t) { t = calloc(1, sizeof *t); t->key = k; *added = 1; return t; }
  if (k < t->key) t->l = insert(t->l, k, added); else if (k > t->key) t->r = insert(t->r, k, added);
  return t;
}
static TNode *remove_key(TNode *t, int k) {
  if (!t) return 0;
  if (k < t->key) t->l = remove_key(t->l, k);
  else if (k > t->key) t->r = remove_key(t->r, k);
  else {
    if (!t->l || !t->r) { TNode *c = t->l ? t->l : t->r; free(t); return c; }
    TNode *m = t->r; while (m->l) m = m->l;
    t->key = m->key; t->r = remove_key(t->r, m->key);
  }
  return t;
}
static void walk(TNode *t) { if (t) { walk(t->l); printf(" %d", t->key); walk(t->r); } }
static int height(TNode *t) { if (!t) return 0; int a = height(t->l), b = height(t->r); return 1 + (a > b ? a : b); }
int main(void) {
  TNode *root = 0; int k, n = 0;
  while (scanf("%d", &k) == 1) { int added = 0; root = insert(root, k, &added); n += added; }
  printf("size=%d height=%d:", n, height(root)); walk(root); printf("\n");
  root = remove_key(root, 30); root = remove_key(root, 50);
  printf("after remove:"); walk(root); printf(" height=%d\n", height(root));
  return 0;
}
