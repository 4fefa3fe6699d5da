#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "gest/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return gest::cli::run_cli(std::move(args), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "gest: " << e.what() << "\n";
    return gest::cli::exit_usage;
  }
}
