// symwasm:
#include <stdio.h>
typedef struct { int prio; const char *task; } Item;
typedef struct { Item heap[32]; int n; } PQueue;
static void swap(Item *a, Item *b) { Item t = *a; *a = *b; *b = t; }
static void pq_push(PQueue *q, int p, const char *t) {
  int i = q->n++; q->heap[i] = (Item){p, t};
  while (i && q->heap[(i - 1) / 2].prio < q->heap[i].prio) { swap(&q->heap[i], &q->heap[(i - 1) / 2]); i = (i - 1) / 2; }
}
static Item pq_pop(PQueue *q) {
  Item top = q->heap[0]; q->heap[0] = q->heap[--q->n];
  for (int i = 0;;) {
    int l = 2 * i + 1, r = l + 1, m = i;
    if (l < q->n && q->heap[l].prio > q->heap[m].prio) m = l;
    if (r < q->n && q->heap[r].prio > q->heap[m].prio) m = r;
    if (m == i) break;
    swap(&q->heap[i], &q->heap[m]); i = m;
  }
  return top;
}
int main(void) {
  PQueue q = {.n = 0};
  pq_push(&q, 3, "write tests"); pq_push(&q, 9, "fix crash"); pq_push(&q, 1, "update docs");
  pq_push(&q, 7, "review patch"); pq_push(&q, 5, "refactor parser"); pq_push(&q, 8, "triage bugs");
  while (q.n) { Item it = pq_pop(&q); printf("%d %s\n", it.prio, it.task); }
  return 0;
}
