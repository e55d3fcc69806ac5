#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return irreg::cli::main(argc, argv, std::cin, std::cout, std::cerr);
}
