#include <iostream>

#include "qmut/cli.hpp"

int main(int argc, char** argv) {
  return qmut::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
