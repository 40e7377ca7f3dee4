#include <iostream>
#include <string>
#include <vector>

#include "wpoint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return wpoint::cli_dispatch(args, std::cout, std::cerr);
}
