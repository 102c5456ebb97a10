#include <cstdio>

int main() {
  std::puts("isotopy cli placeholder");
  return 0;
}
