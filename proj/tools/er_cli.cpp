#include <iostream>
#include <string>
#include <vector>

#include "er/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return er::cmd_dispatch(args, std::cout, std::cerr);
}
