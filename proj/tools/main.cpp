#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const mwp::cli::Result r = mwp::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
