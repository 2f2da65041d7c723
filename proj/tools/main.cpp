#include <iostream>

#include "scanboard/engine/cli.hpp"

int main(int argc, char** argv) {
  return scanboard::engine::cli_main(argc, argv, std::cout, std::cerr);
}
