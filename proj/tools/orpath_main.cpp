#include <iostream>
#include <string>
#include <vector>

#include "orpath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orpath::cli_dispatch(std::move(args), std::cin, std::cout, std::cerr);
}
