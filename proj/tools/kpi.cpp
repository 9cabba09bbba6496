#include <iostream>
#include <string>
#include <vector>

#include "kpi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kpi::run(args, std::cin, std::cout, std::cerr);
}
