#include <iostream>

#include "cy2/verify.hpp"

int main() {
  const auto results = cy2::run_acceptance();
  std::cout << cy2::format_results(results, false);
  for (const auto& r : results) {
    if (!r.pass()) return 1;
  }
  return 0;
}
