#include <iostream>

#include "hocolim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hocolim::io::run_cli(args, std::cout, std::cerr);
}
