#include <iostream>
#include <string>
#include <vector>

#include "flagvar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flagvar::run_cli(args, std::cout, std::cerr);
}
