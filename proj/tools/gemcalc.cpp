#include <iostream>

#include "gemcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gemcalc::run_cli(args, std::cout, std::cerr);
}
