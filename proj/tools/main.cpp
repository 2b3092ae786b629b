#include <iostream>

#include "lpo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lpo::run(args, std::cout, std::cerr);
}
