#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mwp::cli {

namespace {

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return number(v.get<double>());
  return v.dump();
}

}  // namespace

void Report::value(const std::string& name, const json& v) { outputs.push_back({{"name", name}, {"value", v}}); }

void Report::complex(const std::string& name, Complex v, double error) {
  json o = {{"name", name}, {"re", v.real()}, {"im", v.imag()}};
  if (error >= 0) o["error"] = error;
  outputs.push_back(o);
}

void Report::residual(const std::string& name, double r, double tolerance) {
  residuals.push_back({{"name", name}, {"residual", r}, {"tolerance", tolerance}, {"pass", r < tolerance}});
}

bool Report::passed() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const json& r) { return r["pass"].get<bool>(); });
}

json Report::to_json() const {
  return {{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"residuals", residuals}, {"status", status()}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command " << command << "\n";
  for (const auto& [k, v] : inputs.items()) os << "input " << k << " = " << scalar_text(v) << "\n";
  for (const auto& o : outputs) {
    os << "output " << o["name"].get<std::string>() << " =";
    if (o.contains("re")) {
      os << " re " << number(o["re"].get<double>()) << " im " << number(o["im"].get<double>());
      if (o.contains("error")) os << " error " << number(o["error"].get<double>());
    } else {
      os << " " << scalar_text(o["value"]);
    }
    os << "\n";
  }
  for (const auto& r : residuals)
    os << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["name"].get<std::string>() << " residual "
       << number(r["residual"].get<double>()) << " tolerance " << number(r["tolerance"].get<double>()) << "\n";
  os << "status " << status() << "\n";
  return os.str();
}

void run_checks(const std::vector<Check>& checks, Report& report) {
  std::vector<double> results(checks.size(), 0.0);
  std::vector<std::string> failures(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < checks.size(); j = next++) {
      try {
        results[j] = checks[j].residual();
      } catch (const std::exception& e) {
        results[j] = INFINITY;
        failures[j] = e.what();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), checks.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t j = 0; j < checks.size(); ++j) {
    // NaN never passes
    const double r = std::isnan(results[j]) ? INFINITY : results[j];
    report.residual(checks[j].name + (failures[j].empty() ? "" : " (" + failures[j] + ")"), r, checks[j].tolerance);
  }
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

}  // namespace mwp::cli
