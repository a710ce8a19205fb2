// symwasm:
#include <stdio.h>
#include <stdlib.h>
typedef struct node { int v; struct node *next; } Node;
static Node *push(Node *h, int v) { Node *n = malloc(sizeof *n); n->v = v; n->next = h; return n; }
static Node *reverse(Node *h) { Node *p = 0; while (h) { Node *n = h->next; h->next = p; p = h; h = n; } return p; }
static Node *remove_if_even(Node *h) {
  Node **pp = &h;
  while (*pp) { if ((*pp)->v % 2 == 0) { Node *d = *pp; *pp = d->next; free(d); } else pp = &(*pp)->next; }
  return h;
}
static void show(Node *h) { for (; h; h = h->next) printf("%d ", h->v); printf("\n"); }
int main(void) {
  Node *h = 0;
  for (int i = 1; i <= 10; i++) h = push(h, i * i);
  show(h);
  h = reverse(h);
  show(h);
  h = remove_if_even(h);
  show(h);
  while (h) { Node *n = h->next; free(h); h = n; }
  return 0;
}
