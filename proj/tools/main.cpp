#include <iostream>

#include "glyphplot/cli.hpp"

int main(int argc, char** argv) {
  return glyphplot::run_cli(argc, argv, std::cout, std::cerr);
}
