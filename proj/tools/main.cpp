#include <iostream>
#include <string>
#include <vector>

#include "normgeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return normgeo::cli::run(args, std::cout, std::cerr);
}
