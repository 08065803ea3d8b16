#pragma once

#include <string>
#include <vector>

#include "mwp/config.hpp"
#include "report.hpp"

namespace mwp::cli {

struct SuiteOptions {
  EvalConfig cfg;
  unsigned seed = 1;
  int count = 5;
  int max_weight = 6;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
std::vector<Check> suite_checks(const std::string& suite, const SuiteOptions& options);

}  // namespace mwp::cli
