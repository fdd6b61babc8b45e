#include <iostream>
#include <string>
#include <vector>

#include "tn2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tn2::run_cli(args, std::cout, std::cerr);
}
