#include <iostream>
#include <string>
#include <vector>

#include "cliffcat/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cliffcat::run_cli(args, std::cout, std::cerr);
}
