#include <iostream>

#include "biquandle/cli.hpp"

int main(int argc, char** argv) {
  return biq::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
