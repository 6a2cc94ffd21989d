#include <iostream>

#include "qblock/cli.hpp"

int main(int argc, char** argv) {
  return qblock::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
