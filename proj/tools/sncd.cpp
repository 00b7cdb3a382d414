#include <iostream>

#include "sncd/cli.hpp"

int main(int argc, char** argv) {
  return sncd::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
