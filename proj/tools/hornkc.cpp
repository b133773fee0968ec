#include <iostream>
#include <string>
#include <vector>

#include "hornkc/cli_io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hornkc::run_cli(args, std::cout, std::cerr);
}
