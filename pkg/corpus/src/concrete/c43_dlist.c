// symwasm: --stdin "push_back 1\npush_back 2\npush_front 0\npop_back\npush_back 9\npush_front 8\npop_front\n"
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
typedef struct dn { int v; struct dn *prev, *next; } DNode;
typedef struct { DNode *head, *tail; int size; } List;
static void push_back(List *l, int v) {
  DNode *n = calloc(1, sizeof *n); n->v = v; n->prev = l->tail;
  if (l->tail) l->tail->next = n; else l->head = n;
  l->tail = n; l->size++;
}
static void push_front(List *l, int v) {
  DNode *n = calloc(1, sizeof *n); n->v = v; n->next = l->head;
  if (l->head) l->head->prev = n; else l->tail = n;
  l->head = n; l->size++;
}
static void pop(List *l, int back) {
  DNode *n = back ? l->tail : l->head;
  if (!n) return;
  if (n->prev) n->prev->next = n->next; else l->head = n->next;
  if (n->next) n->next->prev = n->prev; else l->tail = n->prev;
  free(n); l->size--;
}
int main(void) {
  List l = {0};
  char cmd[32]; int v;
  while (scanf("%31s", cmd) == 1) {
    if (!strcmp(cmd, "push_back") && scanf("%d", &v) == 1) push_back(&l, v);
    else if (!strcmp(cmd, "push_front") && scanf("%d", &v) == 1) push_front(&l, v);
    else if (!strcmp(cmd, "pop_back")) pop(&l, 1);
    else if (!strcmp(cmd, "pop_front")) pop(&l, 0);
  }
  printf("size=%d fwd:", l.size);
  for (DNode *n = l.head; n; n = n->next) printf(" %d", n->v);
  printf(" rev:");
  for (DNode *n = l.tail; n; n = n->prev) printf(" %d", n->v);
  printf("\n");
  return 0;
}
