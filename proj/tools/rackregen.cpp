#include <iostream>
#include <string>
#include <vector>

#include "rackregen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rackregen::run(args, std::cout, std::cerr);
}
