#include <iostream>
#include <string>
#include <vector>

#include "ruled/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ruled::cli::run(args, std::cout, std::cerr);
}
