#include <cstdlib>
#include <iostream>

#include "toric/cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> budget_env;
  if (const char* b = std::getenv("TORIC_BUDGET")) budget_env = b;
  return toric::cli::main(argc, argv, std::cin, std::cout, std::cerr, budget_env);
}
