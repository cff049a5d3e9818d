#include <iostream>
#include <string>
#include <vector>

#include "ea/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ea::cli::run(std::move(args), std::cout, std::cerr);
}
