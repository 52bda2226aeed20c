#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = equlat::cli::run(args);
  // With output on stdout the report moves to stderr so the output stays parseable.
  std::ostream& report = result.exit_status == equlat::cli::kExitBadInput || result.output ? std::cerr : std::cout;
  if (!result.report.empty()) report << result.report << '\n';
  if (result.output) std::cout << *result.output;
  return result.exit_status;
}
