#include <iostream>
#include <vector>

#include "lieb/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lieb::run_command(args, std::cout, std::cerr);
}
