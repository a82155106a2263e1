#include <iostream>
#include <string>
#include <vector>

#include "monopath/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monopath::cli::run(args, std::cout, std::cerr);
}
