#include <iostream>
#include <string>
#include <vector>

#include "selbound/cli_run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return selbound::cli::run(std::move(args), std::cout, std::cerr);
}
