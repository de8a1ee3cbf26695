#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "polyarc/cli.hpp"

int main(int argc, char** argv) {
  polyarc::cli::RunOptions options;
  options.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
  return polyarc::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, options);
}
