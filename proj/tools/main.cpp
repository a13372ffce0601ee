#include <cstdio>

int main() {
  std::puts("spgl: placeholder");
  return 0;
}
