#include <iostream>

#include <upset/cli.hpp>

int main(int argc, char** argv) {
  return upset::run_cli(argc, argv, std::cout, std::cerr);
}
