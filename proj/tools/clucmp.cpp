#include <iostream>
#include <string>
#include <vector>

#include "clucmp/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return clucmp::run_cli(args, std::cout, std::cerr);
}
