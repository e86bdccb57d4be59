#include <iostream>
#include <string>
#include <vector>

#include "monoidkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monoidkit::run_command(args, std::cout, std::cerr);
}
