// symwasm: --stdin "12 34.5 word 0x1f"
#include <stdio.h>
int main(void) {
  char line[128];
  if (!fgets(line, sizeof line, stdin)) return 1;
  int a, h; double d; char w[16];
  int n = sscanf(line, "%d %lf %15s %x", &a, &d, w, &h);
  printf("n=%d a=%d d=%.2f w=%s h=%d\n", n, a, d, w, h);
  return 0;
}
