// symwasm: --stdin "{[()()]}\n([)]\n((()\n{}{}[]\n"
#include <stdio.h>
#include <string.h>
typedef struct { char items[128]; int top; } Stack;
static void push(Stack *s, char c) { s->items[s->top++] = c; }
static int pop(Stack *s, char *c) { if (!s->top) return 0; *c = s->items[--s->top]; return 1; }
int main(void) {
  char line[128];
  int bad = 0;
  while (fgets(line, sizeof line, stdin)) {
    Stack s = {.top = 0};
    int ok = 1;
    line[strcspn(line, "\n")] = 0;
    for (char *p = line; *p && ok; p++) {
      char c;
      if (strchr("([{", *p)) push(&s, *p);
      else if (!pop(&s, &c) || (c == '(' && *p != ')') || (c == '[' && *p != ']') || (c == '{' && *p != '}')) ok = 0;
    }
    if (s.top) ok = 0;
    printf("%-10s %s\n", line, ok ? "balanced" : "unbalanced");
    bad += !ok;
  }
  return bad;
}
