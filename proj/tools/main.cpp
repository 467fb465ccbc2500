#include <iostream>

#include "kfl/cli.hpp"

int main(int argc, char** argv) {
  return kfl::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
