#include <cstdlib>
#include <iostream>

#include "nlab/cli/commands.hpp"

int main(int argc, char** argv) {
  return nlab::cli::main_entry(argc, argv, std::getenv("NLAB_SEED"), std::cout, std::cerr);
}
