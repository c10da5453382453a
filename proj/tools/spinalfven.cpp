#include <iostream>
#include <string>
#include <vector>

#include "spinalfven/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spinalfven::cli::run_cli(args, std::cout, std::cerr);
}
