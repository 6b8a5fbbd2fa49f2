#include <iostream>

#include "mixedcage/cli.hpp"

int main(int argc, char** argv) {
  return mixedcage::cli_main(argc, argv, std::cin, std::cout, std::cerr);
}
