#include <iostream>
#include <string>
#include <vector>

#include "ringlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return ringlab::run_cli(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "ringlab: internal error: " << e.what() << "\n";
    return 70;
  }
}
