#include <iostream>

#include "sset/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sset::cli::run(args, std::cout, std::cerr);
}
