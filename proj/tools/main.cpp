#include <iostream>
#include <vector>

#include "kch/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kch::run_command(args, std::cout);
}
