#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mwp/config.hpp"

namespace mwp::cli {

using json = nlohmann::json;

// {command, inputs, outputs[], residuals[], status}
struct Report {
  std::string command;
  json inputs = json::object();
  json outputs = json::array();
  json residuals = json::array();

  void input(const std::string& name, const json& value) { inputs[name] = value; }
  void value(const std::string& name, const json& v);
  void complex(const std::string& name, Complex v, double error = -1);
  void residual(const std::string& name, double r, double tolerance);
  bool passed() const;
  std::string status() const { return passed() ? "ok" : "fail"; }

  json to_json() const;
  std::string to_text() const;
};

struct Check {
  std::string name;
  double tolerance;
  std::function<double()> residual;
};

// Runs the checks on a worker pool; results keep the input order.
void run_checks(const std::vector<Check>& checks, Report& report);

// key=value lines, '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path);

}  // namespace mwp::cli
