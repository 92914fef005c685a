#include <iostream>
#include <string>
#include <vector>

#include "mzcorr/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mzcorr::cli::run(args, std::cout, std::cerr);
}
