#include <iostream>

#include "perfclosure/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return perfclosure::run_cli(args, std::cout, std::cerr);
}
