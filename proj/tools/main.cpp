#include <iostream>

#include "grady/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grady::cli::run(args, std::cout, std::cerr);
}
