#pragma once

#include <string>
#include <vector>

namespace mwp::cli {

struct Result {
  int status = 0;  // 0 success, 1 verification or evaluation failure, 2 bad input
  std::string out;
  std::string err;
};

// Runs one command line; args exclude the program name.
Result run(const std::vector<std::string>& args);

}  // namespace mwp::cli
