#include <iostream>

#include "liepoisson_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return liepoisson::cli::run(args, std::cout, std::cerr);
}
