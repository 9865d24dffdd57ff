#include <iostream>

#include "spdiv/cli.hpp"

int main(int argc, char** argv) {
  return spdiv::cli::main_entry(argc, argv, std::cout, std::cerr);
}
