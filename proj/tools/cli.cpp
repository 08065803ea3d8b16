#include "cli.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mwp/meisenstein.hpp"
#include "mwp/multiwp.hpp"
#include "mwp/mzv.hpp"
#include "mwp/relations.hpp"
#include "mwp/weierstrass.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace mwp::cli {

namespace {

// Input errors that map to exit status 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  EvalConfig cfg;
  std::string tau = "i";
  std::string format = "text";
  std::string config;
  unsigned seed = 1;
};

struct Options {
  Common common;
  std::string fn = "multiwp", index, z, suite = "all", method = "direct";
  int k = 2, r = 2, weight = 8, min_weight = 2, max_weight = 12, count = 5, suite_weight = 6, digits = 0;
};

Index parse_index(const std::string& text, bool lattice) {
  if (text.empty()) throw UsageError("missing --index");
  Index idx;
  try {
    idx = Index::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid index: ") + e.what());
  }
  if (lattice && !idx.admissible_for_lattice())
    throw UsageError("index " + idx.str() + " needs every part >= 2");
  return idx;
}

Complex parse_point(const std::string& text, const char* what) {
  if (text.empty()) throw UsageError(std::string("missing --") + what);
  try {
    return parse_complex(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid ") + what + ": " + e.what());
  }
}

ModularPoint parse_tau(const std::string& text) {
  const Complex t = parse_point(text, "tau");
  if (!(t.imag() > 0)) throw UsageError("tau must lie in the upper half plane");
  return ModularPoint(t);
}

template <class T>
T convert(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T out{};
  if (!(in >> out) || !(in >> std::ws).eof()) throw UsageError("config: bad value for " + key + ": " + value);
  return out;
}

// Config file first, flags that were given on the command line win.
void merge_config(CLI::App& app, Common& c) {
  if (c.config.empty()) return;
  std::map<std::string, std::string> file;
  try {
    file = read_config_file(c.config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto given = [&](const char* flag) { return app.get_option(flag)->count() > 0; };
  for (const auto& [key, value] : file) {
    if (key == "M") {
      if (!given("--M")) c.cfg.M = convert<int>(key, value);
    } else if (key == "N") {
      if (!given("--N")) c.cfg.N = convert<int>(key, value);
    } else if (key == "q_order") {
      if (!given("--q-order")) c.cfg.q_order = convert<int>(key, value);
    } else if (key == "tolerance") {
      if (!given("--tol")) c.cfg.tolerance = convert<double>(key, value);
    } else if (key == "precision") {
      if (!given("--precision")) c.cfg.precision = convert<int>(key, value);
    } else if (key == "tau") {
      if (!given("--tau")) c.tau = value;
    } else if (key == "seed") {
      if (!given("--seed")) c.seed = convert<unsigned>(key, value);
    } else if (key == "format") {
      if (!given("--format")) c.format = value;
    } else {
      throw UsageError("config: unknown key " + key);
    }
  }
  if (c.format != "text" && c.format != "json" && c.format != "csv") throw UsageError("config: bad format " + c.format);
}

void record_common(Report& rep, const Common& c) {
  rep.input("tau", c.tau);
  rep.input("M", c.cfg.M);
  rep.input("N", c.cfg.N);
  rep.input("q_order", c.cfg.q_order);
  rep.input("tolerance", c.cfg.tolerance);
  rep.input("precision", c.cfg.precision);
}

std::string csv_report(const Report& rep) {
  std::ostringstream out;
  char buf[160];
  out << "kind,name,re,im,error,residual,tolerance,pass\n";
  for (const json& o : rep.outputs) {
    if (o.contains("re")) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", o["re"].get<double>(), o["im"].get<double>(),
                    o.value("error", -1.0));
      out << "output," << o["name"].get<std::string>() << ',' << buf << ",,,\n";
    } else {
      const json& v = o["value"];
      out << "output," << o["name"].get<std::string>() << ",\"" << (v.is_string() ? v.get<std::string>() : v.dump())
          << "\",,,,,\n";
    }
  }
  for (const json& r : rep.residuals) {
    std::snprintf(buf, sizeof buf, ",,,%.17g,%.17g", r["residual"].get<double>(), r["tolerance"].get<double>());
    std::string name = r["name"].get<std::string>();
    for (char& ch : name)
      if (ch == ',') ch = ';';
    out << "residual," << name << ',' << buf << ',' << (r["pass"].get<bool>() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string render(const Report& rep, const std::string& format) {
  if (format == "json") return rep.to_json().dump(2) + "\n";
  if (format == "csv") return csv_report(rep);
  return rep.to_text();
}

Report do_eval(const Options& o) {
  const Common& c = o.common;
  Report rep;
  rep.command = "eval";
  rep.input("fn", o.fn);
  record_common(rep, c);
  const ModularPoint tau = parse_tau(c.tau);
  auto z = [&] {
    rep.input("z", o.z);
    return parse_point(o.z, "z");
  };
  auto index = [&](bool lattice) {
    const Index idx = parse_index(o.index, lattice);
    rep.input("index", idx.str());
    return idx;
  };
  auto order = [&](int lo) {
    if (o.k < lo) throw UsageError("--k must be >= " + std::to_string(lo));
    rep.input("k", o.k);
    return o.k;
  };
  const std::string& fn = o.fn;
  if (fn == "multiwp") {
    const Index idx = index(true);
    const Complex zz = z();
    rep.input("method", o.method);
    if (o.method == "direct") {
      const Estimate e = multiwp_direct(idx, zz, tau, c.cfg);
      rep.complex("value", e.value, e.error);
    } else if (o.method == "reduce") {
      rep.complex("value", multiwp_reduce(idx).evaluate(zz, tau, c.cfg));
    } else {
      throw UsageError("--method must be direct or reduce");
    }
  } else if (fn == "meis") {
    const Estimate e = meis_direct(index(true), tau, c.cfg);
    rep.complex("value", e.value, e.error);
  } else if (fn == "meis-qexp") {
    const Estimate e = meis_qexp(index(true), tau, c.cfg);
    rep.complex("value", e.value, e.error);
  } else if (fn == "wp") {
    rep.complex("value", wp(z(), tau, c.cfg));
  } else if (fn == "wp-prime") {
    rep.complex("value", wp_prime(z(), tau, c.cfg));
  } else if (fn == "wp-k") {
    const int k = order(2);
    rep.complex("value", wp_k(k, z(), tau, c.cfg));
  } else if (fn == "zeta") {
    rep.complex("value", weier_zeta(z(), tau, c.cfg));
  } else if (fn == "sigma") {
    rep.complex("value", sigma(z(), tau, c.cfg));
  } else if (fn == "G") {
    const int k = order(2);
    rep.complex("value", eisenstein_G(k, tau, c.cfg));
  } else if (fn == "mzv") {
    const Index idx = index(false);
    const int digits = o.digits > 0 ? o.digits : c.cfg.precision;
    const MzvValue v = mzv(idx, digits);
    rep.value("digits", v.str(digits));
    rep.complex("value", Complex(v.approx(), 0), v.error);
  } else if (fn == "hurwitz") {
    const Index idx = index(false);
    const HurwitzValue v = hurwitz_mzv(idx, z(), c.cfg.precision);
    rep.complex("value", v.value, v.error);
  } else if (fn == "monotangent") {
    const int k = order(1);
    const Estimate e = monotangent(k, z(), c.cfg.q_order);
    rep.complex("value", e.value, e.error);
  } else if (fn == "multitangent") {
    const Index idx = index(false);
    const MultitangentReduction red = multitangent_reduce(idx);
    rep.value("reduction", red.str());
    rep.complex("value", red.evaluate(z(), c.cfg.q_order));
  } else if (fn == "g") {
    const Estimate e = g_function(index(false), z(), tau, c.cfg);
    rep.complex("value", e.value, e.error);
  } else if (fn == "fourier22") {
    if (o.r < 1) throw UsageError("--r must be >= 1");
    rep.input("r", o.r);
    rep.complex("value", multiwp22_fourier(o.r, z(), tau, c.cfg));
  } else {
    throw UsageError("unknown function " + fn);
  }
  return rep;
}

Report do_reduce(const Options& o) {
  Report rep;
  rep.command = "reduce";
  const Index idx = parse_index(o.index, true);
  rep.input("index", idx.str());
  const ReducedForm form = multiwp_reduce(idx);
  rep.value("form", form.str());
  if (!o.z.empty()) {
    record_common(rep, o.common);
    rep.input("z", o.z);
    const ModularPoint tau = parse_tau(o.common.tau);
    rep.complex("value", form.evaluate(parse_point(o.z, "z"), tau, o.common.cfg));
  }
  return rep;
}

Report do_qexp(const Options& o) {
  Report rep;
  rep.command = "qexp";
  record_common(rep, o.common);
  const Index idx = parse_index(o.index, true);
  rep.input("index", idx.str());
  const ModularPoint tau = parse_tau(o.common.tau);
  const Estimate e = meis_qexp(idx, tau, o.common.cfg);
  rep.complex("value", e.value, e.error);
  rep.complex("constant_term", Complex(mzv_value(idx), 0));
  return rep;
}

Report do_relations(const Options& o) {
  if (o.weight < 2) throw UsageError("--weight must be >= 2");
  Report rep;
  rep.command = "relations";
  rep.input("weight", o.weight);
  const RelationMatrix span = relation_span(o.weight);
  rep.value("dim_conj", conjectured_dim(o.weight));
  rep.value("rel_conj", conjectured_rel(o.weight));
  rep.value("rel_anti", span.rank());
  json rows = json::array();
  for (const Combination& row : span.basis()) rows.push_back(row.str());
  rep.value("basis", rows);
  return rep;
}

std::string do_table(const Options& o, Report& rep) {
  if (o.min_weight < 2 || o.max_weight < o.min_weight) throw UsageError("need 2 <= --min-weight <= --max-weight");
  rep.command = "table";
  rep.input("min_weight", o.min_weight);
  rep.input("max_weight", o.max_weight);
  const auto rows = relation_table(o.min_weight, o.max_weight);
  const std::string& format = o.common.format;
  // csv unless asked otherwise
  if (format == "csv" || format == "text") {
    if (format == "csv") return relation_table_csv(rows);
    std::ostringstream out;
    out << "weight  dim_conj  rel_conj  rel_anti  deficit\n";
    char buf[96];
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%6d  %8ld  %8ld  %8ld  %7ld\n", r.weight, static_cast<long>(r.dim_conj),
                    static_cast<long>(r.rel_conj), static_cast<long>(r.rel_anti), static_cast<long>(r.deficit));
      out << buf;
    }
    return out.str();
  }
  json table = json::array();
  for (const auto& r : rows)
    table.push_back({{"weight", r.weight},
                     {"dim_conj", r.dim_conj},
                     {"rel_conj", r.rel_conj},
                     {"rel_anti", r.rel_anti},
                     {"deficit", r.deficit}});
  rep.value("rows", table);
  return render(rep, format);
}

Report do_verify(const Options& o) {
  Report rep;
  rep.command = "verify";
  record_common(rep, o.common);
  rep.input("suite", o.suite);
  rep.input("seed", o.common.seed);
  rep.input("count", o.count);
  rep.input("max_weight", o.suite_weight);
  if (o.count < 1) throw UsageError("--count must be >= 1");
  SuiteOptions so{o.common.cfg, o.common.seed, o.count, o.suite_weight};
  std::vector<Check> checks;
  try {
    checks = suite_checks(o.suite, so);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  run_checks(checks, rep);
  return rep;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--M", c.cfg.M, "outer lattice cutoff");
  sub->add_option("--N", c.cfg.N, "inner lattice cutoff");
  sub->add_option("--q-order", c.cfg.q_order, "q-expansion order");
  sub->add_option("--tol", c.cfg.tolerance, "tolerance");
  sub->add_option("--precision", c.cfg.precision, "decimal digits for exact-arithmetic stages");
  sub->add_option("--tau", c.tau, "modular parameter a+bi")->capture_default_str();
  sub->add_option("--config", c.config, "key=value configuration file");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--seed", c.seed, "random seed");
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Result result{0, {}, {}};
  std::ostringstream out, err;
  CLI::App app{"multiple Weierstrass and Eisenstein evaluations"};
  app.require_subcommand(1);
  Options o;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a function");
  eval->add_option("--fn", o.fn, "function")
      ->check(CLI::IsMember({"multiwp", "meis", "meis-qexp", "wp", "wp-prime", "wp-k", "zeta", "sigma", "G", "mzv",
                             "hurwitz", "monotangent", "multitangent", "g", "fourier22"}));
  eval->add_option("--index", o.index, "index k1,...,kr");
  eval->add_option("--z", o.z, "point a+bi");
  eval->add_option("--k", o.k, "order for wp-k, G, monotangent");
  eval->add_option("--r", o.r, "depth for fourier22");
  eval->add_option("--method", o.method, "direct or reduce for multiwp");
  eval->add_option("--digits", o.digits, "digits for mzv");
  CLI::App* reduce = app.add_subcommand("reduce", "reduce a multiple wp function");
  reduce->add_option("--index", o.index, "index")->required();
  reduce->add_option("--z", o.z, "evaluate the reduction at this point");
  CLI::App* qexp = app.add_subcommand("qexp", "multiple Eisenstein series through its q-expansion");
  qexp->add_option("--index", o.index, "index")->required();
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite")->check(CLI::IsMember(suite_names()));
  verify->add_option("--count", o.count, "sample points per identity");
  verify->add_option("--max-weight", o.suite_weight, "largest weight checked");
  CLI::App* relations = app.add_subcommand("relations", "relation span in one weight");
  relations->add_option("--weight", o.weight, "weight")->required();
  CLI::App* table = app.add_subcommand("table", "relation-count table");
  table->add_option("--min-weight", o.min_weight, "first weight");
  table->add_option("--max-weight", o.max_weight, "last weight");
  for (CLI::App* sub : {eval, reduce, qexp, verify, relations, table}) add_common(sub, o.common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    CLI::App* sub = app.get_subcommands().front();
    merge_config(*sub, o.common);
    try {
      o.common.cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (sub == table) {
      Report rep;
      if (sub->get_option("--format")->count() == 0 && o.common.config.empty()) o.common.format = "csv";
      result.out = do_table(o, rep);
      return result;
    }
    Report rep = sub == eval        ? do_eval(o)
                 : sub == reduce    ? do_reduce(o)
                 : sub == qexp      ? do_qexp(o)
                 : sub == relations ? do_relations(o)
                                    : do_verify(o);
    result.out = render(rep, o.common.format);
    result.status = rep.passed() ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    result.status = app.exit(e, out, err);
    if (result.status != 0) result.status = 2;
    result.out += out.str();
    result.err += err.str();
  } catch (const UsageError& e) {
    result.status = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.status = 1;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace mwp::cli
