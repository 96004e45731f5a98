#include <iostream>

int main() {
  std::cout << "steinkit: placeholder\n";
  return 0;
}
