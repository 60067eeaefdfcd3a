#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "torblocks/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return torblocks::cli::run(args, std::cin, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
