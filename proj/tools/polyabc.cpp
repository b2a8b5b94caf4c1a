#include <iostream>
#include <string>
#include <vector>

#include "polyabc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return polyabc::run_command(args, std::cout, std::cerr);
}
