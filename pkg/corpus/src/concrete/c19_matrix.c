// symwasm:
#include <stdio.h>
int main(void) {
  int a[4][4], b[4][4], c[4][4];
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) { a[i][j] = i + j; b[i][j] = i * j - 2; }
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) {
      c[i][j] = 0;
      for (int k = 0; k < 4; k++) c[i][j] += a[i][k] * b[k][j];
    }
  for (int i = 0; i < 4; i++) printf("%4d %4d %4d %4d\n", c[i][0], c[i][1], c[i][2], c[i][3]);
  return 0;
}
