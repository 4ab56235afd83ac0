#include <iostream>

#include "dtl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dtl::cli::run(args, std::cout, std::cerr);
}
