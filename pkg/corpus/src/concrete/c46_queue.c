// symwasm:
#include <stdio.h>
#include <stdlib.h>
typedef struct qn { int v; struct qn *next; } QNode;
typedef struct { QNode *front, *back; int size; } Queue;
static void enqueue(Queue *q, int v) {
  QNode *n = malloc(sizeof *n); n->v = v; n->next = 0;
  if (q->back) q->back->next = n; else q->front = n;
  q->back = n; q->size++;
}
static int dequeue(Queue *q) {
  QNode *n = q->front; int v = n->v;
  q->front = n->next; if (!q->front) q->back = 0;
  free(n); q->size--; return v;
}
int main(void) {
  /* breadth-first search on a small grid graph */
  static const char *grid[] = {"S.#.....", ".##.###.", "....#...", "#.#.#.#.", "..#...#G"};
  int rows = 5, cols = 8, dist[5][8];
  for (int r = 0; r < rows; r++) for (int c = 0; c < cols; c++) dist[r][c] = -1;
  Queue q = {0};
  dist[0][0] = 0; enqueue(&q, 0);
  while (q.size) {
    int cur = dequeue(&q), r = cur / cols, c = cur % cols;
    static const int dr[] = {1, -1, 0, 0}, dc[] = {0, 0, 1, -1};
    for (int k = 0; k < 4; k++) {
      int nr = r + dr[k], nc = c + dc[k];
      if (nr < 0 || nc < 0 || nr >= rows || nc >= cols || grid[nr][nc] == '#' || dist[nr][nc] >= 0) continue;
      dist[nr][nc] = dist[r][c] + 1; enqueue(&q, nr * cols + nc);
    }
  }
  printf("distance to G: %d\n", dist[4][7]);
  return 0;
}
