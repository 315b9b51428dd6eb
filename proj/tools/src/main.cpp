#include <iostream>

#include "hecke_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hecke::cli::run_command(args, std::cout, std::cerr);
}
