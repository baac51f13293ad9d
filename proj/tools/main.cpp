#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = omegastar::tools::run_command(args, std::cin);
  if (!result.payload.empty()) std::cout << result.payload << '\n';
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics << '\n';
  return result.exit_code;
}
