#include <iostream>
#include <string>
#include <vector>

#include "mpart/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mpart::cli::run(std::move(args), std::cout, std::cerr);
}
