#include <iostream>

#include "polling/cli.hpp"

int main(int argc, char** argv) {
  return polling::run_cli(argc, argv, std::cout, std::cerr);
}
