#include <iostream>
#include <string>
#include <vector>

#include "ordfree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ordfree::run_cli(args, std::cout, std::cerr);
}
