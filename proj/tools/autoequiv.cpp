#include <iostream>
#include <string>
#include <vector>

#include "autoequiv/cli.hpp"

int main(int argc, char** argv) {
  return autoequiv::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
