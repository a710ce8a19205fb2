// symwasm: --args car cart carbon dog do dove card
#include <stdio.h>
#include <stdlib.h>
typedef struct trie { struct trie *kid[26]; int end; } Trie;
static void add(Trie *t, const char *s) { for (; *s; s++) { int c = *s - 'a'; if (!t->kid[c]) t->kid[c] = calloc(1, sizeof(Trie)); t = t->kid[c]; } t->end = 1; }
static int count(const Trie *t) { int n = t->end; for (int i = 0; i < 26; i++) if (t->kid[i]) n += count(t->kid[i]); return n; }
static const Trie *find(const Trie *t, const char *s) { for (; t && *s; s++) t = t->kid[*s - 'a']; return t; }
int main(int argc, char **argv) {
  Trie *root = calloc(1, sizeof(Trie));
  for (int i = 1; i < argc; i++) add(root, argv[i]);
  const char *pre[] = {"car", "do", "ca", "x"};
  for (int i = 0; i < 4; i++) { const Trie *n = find(root, pre[i]); printf("%s*: %d\n", pre[i], n ? count(n) : 0); }
  return 0;
}
