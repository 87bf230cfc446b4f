#include <iostream>
#include <string>
#include <vector>

#include "activeinfo/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return activeinfo::cli::run(args, std::cout, std::cerr);
}
