// symwasm:
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
struct rec { char name[12]; int age; };
static int by_age(const void *a, const void *b) {
  const struct rec *x = a, *y = b;
  return x->age != y->age ? x->age - y->age : strcmp(x->name, y->name);
}
int main(void) {
  struct rec r[] = {{"mallory", 41}, {"alice", 30}, {"bob", 25}, {"carol", 30}, {"dave", 19}};
  int n = sizeof r / sizeof r[0];
  qsort(r, n, sizeof r[0], by_age);
  for (int i = 0; i < n; i++) printf("%-8s %d\n", r[i].name, r[i].age);
  return 0;
}
