#include <iostream>
#include <string>
#include <vector>

#include "vpotts/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vpotts::run_command(args, std::cin, std::cout, std::cerr);
}
