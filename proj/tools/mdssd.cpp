#include <iostream>
#include <string>
#include <vector>

#include "mdssd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mdssd::run_cli(args, std::cout, std::cerr);
}
