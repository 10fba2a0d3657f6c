#include "faraday/acceptance.hpp"

#include <iostream>

int main() {
  const auto results = faraday::run_acceptance();
  faraday::print_acceptance(results, std::cout);
  return faraday::all_passed(results) ? 0 : 1;
}
