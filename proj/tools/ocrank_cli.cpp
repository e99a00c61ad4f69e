#include <iostream>

#include "ocrank/cli.hpp"

int main(int argc, char** argv) {
  return ocrank::run_cli(argc, argv, std::cout, std::cerr);
}
