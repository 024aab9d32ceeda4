#include <unistd.h>

#include <iostream>

#include "vecq/cli.hpp"

int main(int argc, char** argv) {
  return vecq::cli::run(argc, argv, std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
}
