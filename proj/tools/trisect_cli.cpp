#include <iostream>

#include "trisect/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trisect::run_cli(args, std::cout, std::cerr);
}
