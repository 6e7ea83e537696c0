#include <iostream>
#include <string>
#include <vector>

#include "bohrkit/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bohrkit::cli::run(args, std::cout, std::cerr);
}
