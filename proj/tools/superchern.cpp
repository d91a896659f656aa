#include <iostream>
#include <string>
#include <vector>

#include "superchern/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return superchern::cli::run(args, std::cout, std::cerr);
}
