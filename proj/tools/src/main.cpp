#include <iostream>
#include <string>
#include <vector>

#include "zfree/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return zfree::cli::run_subcommand(args, std::cout, std::cerr);
}
