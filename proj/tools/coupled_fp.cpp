#include <iostream>

#include "coupled_fp/cli.hpp"

int main(int argc, char** argv) {
  using namespace coupled_fp::cli;
  const auto parsed = parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, std::cout, std::cerr);
}
