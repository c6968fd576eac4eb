#include <iostream>

#include "lrc/cli.hpp"

int main(int argc, char** argv) {
  return lrc::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, std::cin);
}
