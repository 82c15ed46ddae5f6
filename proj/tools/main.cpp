#include <iostream>

#include "poincare_cli.hpp"

int main(int argc, char** argv) {
  return poincare::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
