#include <iostream>
#include <string>
#include <vector>

#include "pizza/cli/cli.hpp"

int main(int argc, char** argv) {
  return pizza::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
