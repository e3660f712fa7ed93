#include "staircase/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const staircase::CommandResult r = staircase::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
