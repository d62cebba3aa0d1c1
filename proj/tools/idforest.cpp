#include <iostream>
#include <string>
#include <vector>

#include "idforest/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return idforest::cli::run(args, std::cin, std::cout, std::cerr);
}
