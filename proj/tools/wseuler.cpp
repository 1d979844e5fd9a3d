#include <iostream>

#include "wseuler/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return wseuler::cli::main(argc, argv, {std::cin, std::cout, std::cerr});
}
