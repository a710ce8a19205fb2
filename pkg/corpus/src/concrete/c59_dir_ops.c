// symwasm: --file "a.txt=aaa" --file "b.txt=bbbbbb"
#include <stdio.h>
#include <sys/stat.h>
int main(void) {
  struct stat st;
  const char *names[] = {"a.txt", "b.txt", "c.txt"};
  for (int i = 0; i < 3; i++) {
    if (stat(names[i], &st) == 0) printf("%s size=%lld reg=%d\n", names[i], (long long)st.st_size, S_ISREG(st.st_mode));
    else printf("%s missing\n", names[i]);
  }
  return 0;
}
