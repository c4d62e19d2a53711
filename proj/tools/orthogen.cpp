#include <iostream>
#include <string>
#include <vector>

#include "orthogen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return orthogen::cli::run(args, std::cout, std::cerr);
}
