// symwasm: --stdin "The quick brown fox jumps over the lazy dog"
#include <stdio.h>
#include <stdint.h>
int main(void) {
  uint32_t crc = 0xFFFFFFFFu;
  int c;
  while ((c = getchar()) != EOF) {
    crc ^= (uint8_t)c;
    for (int k = 0; k < 8; k++) crc = (crc >> 1) ^ (0xEDB88320u & -(crc & 1));
  }
  printf("%08x\n", crc ^ 0xFFFFFFFFu);
  return 0;
}
