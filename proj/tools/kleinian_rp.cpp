#include <iostream>
#include <string>
#include <vector>

#include "kleinian/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kleinian::cli::run(args, std::cout, std::cerr);
}
