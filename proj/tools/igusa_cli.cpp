#include <iostream>
#include <string>
#include <vector>

#include "igusa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return igusa::run_cli(args, std::cout, std::cerr);
}
