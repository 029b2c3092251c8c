#include <iostream>

#include "degmc/cli.hpp"

int main(int argc, char** argv) {
  return degmc::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout);
}
