#include <iostream>
#include <string>
#include <vector>

#include "inoue/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const inoue::cli::Result r = inoue::cli::run(args);
  (r.exit_code == 2 ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}
