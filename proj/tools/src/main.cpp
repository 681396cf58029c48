#include <iostream>
#include <string>
#include <vector>

#include "primel_tools/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return primel::cli::run(args, std::cin, std::cout, std::cerr);
}
