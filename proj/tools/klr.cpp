#include <iostream>

#include "klr/cli.hpp"

int main(int argc, char** argv) {
  return klr::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
