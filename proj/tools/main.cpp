#include <iostream>
#include <string>
#include <vector>

#include "raag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return raag::run(args, std::cout, std::cerr);
}
