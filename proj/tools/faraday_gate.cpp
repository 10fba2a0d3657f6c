#include "faraday/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace faraday::cli;
  RunSpec spec;
  try {
    spec = parse_args(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n'
              << "run 'faraday_gate --help' for the list of commands\n";
    return kUsage;
  }
  return execute(spec, std::cout, std::cerr);
}
