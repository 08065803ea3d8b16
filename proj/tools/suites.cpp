#include "suites.hpp"

#include <cmath>
#include <stdexcept>

#include "mwp/meisenstein.hpp"
#include "mwp/multiwp.hpp"
#include "mwp/relations.hpp"
#include "mwp/sampling.hpp"
#include "mwp/weierstrass.hpp"

namespace mwp::cli {

namespace {

std::string at(const SamplePoint& s) { return " at z=" + format_complex(s.z, 6) + " tau=" + format_complex(s.tau.tau(), 6); }

std::vector<Index> lattice_indices(int max_weight, std::size_t max_depth) {
  std::vector<Index> out;
  for (int w = 2; w <= max_weight; ++w)
    for (const Index& c : compositions_ge2(w))
      if (c.depth() <= max_depth) out.push_back(c);
  return out;
}

void intro_reductions(const SuiteOptions& o, std::vector<Check>& out) {
  const EvalConfig cfg = o.cfg;
  for (const SamplePoint& s : fundamental_domain_samples(o.count, o.seed)) {
    auto residual = [s, cfg](const Index& idx, auto expected) {
      return [s, cfg, idx, expected] {
        GtEvaluator gt(s.tau, cfg);
        auto G = [&](int k) { return eisenstein_G(k, s.tau, cfg); };
        const Complex wp_z = wp(s.z, s.tau, cfg);
        return std::abs(multiwp_direct(idx, s.z, s.tau, cfg).value - expected(G, wp_z, gt, s));
      };
    };
    out.push_back({"wp_{2,2} = G2 wp + (G2^2 + 5 G4)/2" + at(s), 1e-7,
                   residual(Index{2, 2}, [](auto G, Complex w, GtEvaluator&, const SamplePoint&) {
                     return G(2) * w + 0.5 * (G(2) * G(2) + 5.0 * G(4));
                   })});
    out.push_back({"wp_{2,2,2} = (G2^2 - G4)/2 wp + G2^3/6 + 5/2 G2 G4 - 14/3 G6" + at(s), 1e-7,
                   residual(Index{2, 2, 2}, [](auto G, Complex w, GtEvaluator&, const SamplePoint&) {
                     return 0.5 * (G(2) * G(2) - G(4)) * w + G(2) * G(2) * G(2) / 6.0 + 2.5 * G(2) * G(4) -
                            14.0 / 3 * G(6);
                   })});
    out.push_back({"wp_{3,3} = -3 G4 wp - 21/2 G6" + at(s), 1e-7,
                   residual(Index{3, 3}, [](auto G, Complex w, GtEvaluator&, const SamplePoint&) {
                     return -3.0 * G(4) * w - 10.5 * G(6);
                   })});
    out.push_back({"wp_{2,3} = G~2 wp_3 - 3 G~3 wp - 11 G~5 - 2 G~{2,3}" + at(s), 1e-7,
                   residual(Index{2, 3}, [cfg](auto, Complex w, GtEvaluator& gt, const SamplePoint& p) {
                     return gt.symbol(Index{2}) * wp_k(3, p.z, p.tau, cfg) - 3.0 * gt.symbol(Index{3}) * w -
                            11.0 * gt.symbol(Index{5}) - 2.0 * gt.symbol(Index{2, 3});
                   })});
  }
}

void reduction(const SuiteOptions& o, std::vector<Check>& out) {
  const EvalConfig cfg = o.cfg;
  for (const SamplePoint& s : fundamental_domain_samples(o.count, o.seed))
    for (const Index& idx : lattice_indices(o.max_weight, 3))
      out.push_back({"reduce " + idx.str() + at(s), 1e-5, [s, cfg, idx] {
                       return std::abs(multiwp_reduce(idx).evaluate(s.z, s.tau, cfg) -
                                       multiwp_direct(idx, s.z, s.tau, cfg).value);
                     }});
}

void antipode(const SuiteOptions& o, std::vector<Check>& out) {
  const EvalConfig cfg = o.cfg;
  for (int r = 1; r <= 3; ++r)
    for (int j = 0; j < o.count; ++j) {
      const std::vector<Complex> x = small_points(r, 0.08, o.seed + static_cast<unsigned>(31 * j + r));
      const ModularPoint tau(Complex(0, r == 3 ? 2.0 : 1.0));
      out.push_back({"antipode r=" + std::to_string(r) + " sample " + std::to_string(j), 1e-5,
                     [x, tau, cfg, r] { return std::abs(antipode_residual(r, x, tau, cfg)); }});
    }
  for (int w = 2; w <= std::min(o.max_weight, 8); ++w)
    for (const Index& source : compositions_ge2(w + 1)) {
      const Combination a = antipode_relation(source);
      if (a.is_zero()) continue;
      out.push_back({"antipode relation from " + source.str() + " at tau=2i", 1e-5,
                     [a, cfg] { return std::abs(evaluate_relation(a, ModularPoint(Complex(0, 2)), cfg)); }});
    }
}

void mzv_relations(const SuiteOptions& o, std::vector<Check>& out) {
  const int digits = std::max(12, o.cfg.precision);
  for (const Index& idx : lattice_indices(std::max(o.max_weight, 2), 16))
    out.push_back({"mzv relation " + idx.str(), 1e-6, [idx, digits] { return mzv_relation_residual(idx, digits); }});
}

void eisenstein_relations(const SuiteOptions& o, std::vector<Check>& out) {
  const EvalConfig cfg = o.cfg;
  for (const Index& idx : lattice_indices(std::min(o.max_weight, 6), 3))
    for (int m = 1; m <= 3; ++m)
      out.push_back({"z^" + std::to_string(m) + " relation " + idx.str(), 1e-5, [idx, m, cfg] {
                       return eisenstein_relation_residual(idx, m, ModularPoint(Complex(0, 2)), cfg);
                     }});
}

void dual_pipeline(const SuiteOptions& o, std::vector<Check>& out) {
  const EvalConfig cfg = o.cfg;
  for (Complex t : {Complex(0, 1), Complex(0, 2), Complex(0.5, 2)})
    for (const Index& idx : lattice_indices(std::min(o.max_weight, 7), 16))
      out.push_back({"G~" + idx.str() + " direct vs q-expansion at tau=" + format_complex(t, 3), 1.0,
                     [t, idx, cfg] {
                       const ModularPoint tau(t);
                       const Estimate q = meis_qexp(idx, tau, cfg), d = meis_direct(idx, tau, cfg);
                       // residual in units of the combined error budget
                       return std::abs(q.value - d.value) / (cfg.tolerance + q.error + d.error);
                     }});
}

void fourier(const SuiteOptions& o, std::vector<Check>& out) {
  const EvalConfig cfg = o.cfg;
  const ModularPoint tau(Complex(0, 2));
  for (int r = 1; r <= 3; ++r)
    for (Complex z : {Complex(0.2, 0.4), Complex(-0.35, 1.3)})
      out.push_back({"wp_{2^" + std::to_string(r) + "} g-expansion at z=" + format_complex(z, 3), 1e-6, [r, z, tau, cfg] {
                       return std::abs(multiwp22_fourier(r, z, tau, cfg) -
                                       multiwp_direct(Index(std::vector<int>(r, 2)), z, tau, cfg).value);
                     }});
}

void modular(const SuiteOptions& o, std::vector<Check>& out) {
  const EvalConfig cfg = o.cfg;
  const ModularPoint tau(Complex(0, 2));
  const Complex z(0.3, 0.2);
  for (int r = 0; r <= 2; ++r) {
    out.push_back({"S on wp_{2^" + std::to_string(r) + "}", 1e-6,
                   [r, z, tau, cfg] { return modular_transform_check(r, {0, -1, 1, 0}, z, tau, cfg); }});
    out.push_back({"T on wp_{2^" + std::to_string(r) + "}", 1e-6,
                   [r, z, tau, cfg] { return modular_transform_check(r, {1, 1, 0, 1}, z, tau, cfg); }});
  }
}

void legendre(const SuiteOptions& o, std::vector<Check>& out) {
  const EvalConfig cfg = o.cfg;
  for (const SamplePoint& s : fundamental_domain_samples(o.count, o.seed))
    out.push_back({"eta_1 tau - eta_tau = 2 pi i at tau=" + format_complex(s.tau.tau(), 6), 1e-10, [s, cfg] {
                     const QuasiPeriods q = quasi_periods(s.tau, cfg, s.z);
                     return std::abs(q.eta_1 * s.tau.tau() - q.eta_tau - kTwoPiI);
                   }});
}

using SuiteFn = void (*)(const SuiteOptions&, std::vector<Check>&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"intro-reductions", intro_reductions}, {"reduction", reduction},       {"antipode", antipode},
      {"mzv-relations", mzv_relations},       {"eisenstein-relations", eisenstein_relations},
      {"dual-pipeline", dual_pipeline},       {"fourier", fourier},           {"modular", modular},
      {"legendre", legendre}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

std::vector<Check> suite_checks(const std::string& suite, const SuiteOptions& options) {
  std::vector<Check> out;
  bool found = false;
  for (const auto& [name, fn] : suites())
    if (suite == name || suite == "all") {
      fn(options, out);
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown suite " + suite);
  return out;
}

}  // namespace mwp::cli
