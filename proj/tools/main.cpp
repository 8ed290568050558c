#include <iostream>

#include "permband/cli.hpp"

int main(int argc, char** argv) {
  return permband::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
