#include "parab/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parab::cli::run(args, std::cin, std::cout, std::cerr, std::getenv("PARAB_FORMAT"));
}
