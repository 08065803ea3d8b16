#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using mwp::cli::run;
using nlohmann::json;

namespace {

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE_MESSAGE(r.status == 0, r.err);
  return json::parse(r.out);
}

std::complex<double> output(const json& report, const std::string& name) {
  for (const json& o : report["outputs"])
    if (o["name"] == name) return {o["re"].get<double>(), o["im"].get<double>()};
  FAIL("no output " << name);
  return {};
}

}  // namespace

TEST_SUITE("cli") {
TEST_CASE("eval agrees with reduce at the same point") {
  const std::vector<std::string> point{"--z", "0.3+0.2i", "--tau", "i"};
  for (const char* index : {"2,2", "2,3", "3,2,2"}) {
    std::vector<std::string> e{"eval", "--fn", "multiwp", "--index", index};
    std::vector<std::string> r{"reduce", "--index", index};
    e.insert(e.end(), point.begin(), point.end());
    r.insert(r.end(), point.begin(), point.end());
    const auto direct = output(run_json(e), "value"), reduced = output(run_json(r), "value");
    CHECK_MESSAGE(std::abs(direct - reduced) < 1e-7 * (1 + std::abs(direct)), index);
  }
}

TEST_CASE("table reproduces the relation counts") {
  const auto r = run({"table", "--max-weight", "12"});
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "weight,dim_conj,rel_conj,rel_anti,deficit");
  std::vector<int> anti;
  while (std::getline(in, line)) {
    int w, d, c, a, f;
    REQUIRE(std::sscanf(line.c_str(), "%d,%d,%d,%d,%d", &w, &d, &c, &a, &f) == 5);
    anti.push_back(a);
  }
  CHECK(anti == std::vector<int>{0, 0, 0, 0, 1, 1, 4, 5, 13, 19, 40});
  const json j = run_json({"table", "--min-weight", "9", "--max-weight", "9"});
  CHECK(j["outputs"][0]["value"][0]["deficit"] == 1);
}

TEST_CASE("verify intro-reductions passes with one residual per identity and point") {
  const auto r = run({"verify", "--suite", "intro-reductions", "--count", "2", "--format", "json"});
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["status"] == "ok");
  REQUIRE(j["residuals"].size() == 8);
  for (const json& res : j["residuals"]) {
    CHECK(res["pass"] == true);
    CHECK(res["residual"].get<double>() < 1e-7);
  }
}

TEST_CASE("text output carries the JSON values exactly") {
  const std::vector<std::string> args{"eval", "--fn", "wp", "--z", "0.21+0.37i", "--tau", "0.1+1.2i"};
  const json j = run_json(args);
  const auto t = run(args);
  REQUIRE(t.status == 0);
  const auto pos = t.out.find("output value = ");
  REQUIRE(pos != std::string::npos);
  double re = 0, im = 0;
  REQUIRE(std::sscanf(t.out.c_str() + pos, "output value = re %lf im %lf", &re, &im) == 2);
  CHECK(re == j["outputs"][0]["re"].get<double>());
  CHECK(im == j["outputs"][0]["im"].get<double>());
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("seeded verify runs are identical") {
  const std::vector<std::string> args{"verify", "--suite", "reduction", "--count", "2", "--max-weight", "5",
                                      "--seed", "17", "--format", "json"};
  const auto a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto other = args;
  other[8] = "18";
  CHECK(run(other).out != a.out);
}

TEST_CASE("config file, flag precedence and exit codes") {
  const std::string path = "cli_test_config.txt";
  {
    std::ofstream f(path);
    f << "# test\ntau = 2i\nM = 60\nformat = json\n";
  }
  json j = json::parse(run({"eval", "--fn", "G", "--k", "4", "--config", path}).out);
  CHECK(j["inputs"]["tau"] == "2i");
  CHECK(j["inputs"]["M"] == 60);
  j = json::parse(run({"eval", "--fn", "G", "--k", "4", "--config", path, "--tau", "i"}).out);
  CHECK(j["inputs"]["tau"] == "i");
  std::remove(path.c_str());

  CHECK(run({"eval", "--fn", "multiwp", "--index", "2,1", "--z", "0.3i"}).status == 2);
  CHECK(run({"eval", "--fn", "wp", "--z", "0.3+zi"}).status == 2);
  CHECK(run({"eval", "--fn", "wp", "--z", "0.3i", "--tau", "-i"}).status == 2);
  CHECK(run({"eval", "--fn", "nope"}).status == 2);
  CHECK(run({"eval", "--unknown"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"verify", "--suite", "missing"}).status == 2);
  CHECK(run({"eval", "--fn", "wp", "--z", "0.3i", "--M", "0"}).status == 2);
  CHECK(run({"eval", "--fn", "wp", "--config", "/nonexistent/cfg"}).status == 2);
  // on the lattice
  CHECK(run({"eval", "--fn", "wp", "--z", "1+i"}).status == 1);
  // a starved q-expansion cannot meet the tolerance
  CHECK(run({"verify", "--suite", "dual-pipeline", "--max-weight", "5", "--q-order", "2"}).status == 1);
  CHECK(run({"eval", "--help"}).status == 0);
}
}
