#include "mwp/meisenstein.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "mwp/lattice.hpp"
#include "mwp/mzv.hpp"

namespace mwp {

namespace {

void require_lattice_admissible(const Index& index, const char* who) {
  if (!index.admissible_for_lattice()) throw std::invalid_argument(std::string(who) + ": parts must be >= 2");
}

double cached_mzv(const Index& idx) {
  static std::mutex mu;
  static std::map<Index, double> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(idx);
    if (it != cache.end()) return it->second;
  }
  const double v = mzv(idx, 18).approx();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(idx, v);
  return v;
}

// ordered sum over increasing integer n in [lo, hi] of prod (u_j + n_j)^{-k_j}
Complex nested_block_sum(const std::vector<int>& k, const std::vector<Complex>& u, long lo, long hi) {
  const std::size_t s = k.size();
  std::vector<Complex> acc(s + 1, 0.0);
  acc[0] = 1.0;
  for (long n = lo; n <= hi; ++n) {
    for (std::size_t j = s; j >= 1; --j) {
      const Complex d = u[j - 1] + static_cast<double>(n);
      if (d == 0.0) throw std::domain_error("multitangent sum hits a pole");
      acc[j] += acc[j - 1] * std::pow(d, -k[j - 1]);
    }
  }
  return acc[s];
}

// (2 pi)^n/(n-1)!, the size of the first Lipschitz coefficient
double lipschitz_scale(int n) { return std::exp(n * std::log(2 * kPi) - std::lgamma(static_cast<double>(n))); }

}  // namespace

Estimate monotangent(int k, Complex z, int q_order) {
  if (k < 1) throw std::invalid_argument("monotangent: order must be >= 1");
  if (z.imag() > 0) {
    double err = 0;
    const Complex v = monotangent_lipschitz(k, z, q_order, &err);
    return {v, err};
  }
  if (z.imag() < 0) {
    double err = 0;
    const Complex v = monotangent_lipschitz(k, -z, q_order, &err);
    return {(k % 2 ? -1.0 : 1.0) * v, err};
  }
  const Complex v = monotangent_value(k, z);
  return {v, 1e-15 * std::abs(v)};
}

Estimate monotangent_direct(int k, Complex z, long N) {
  if (k < 1) throw std::invalid_argument("monotangent: order must be >= 1");
  std::vector<Complex> partial;
  for (int level = 0; level < 5; ++level) {
    const long n_max = (N << level) - 1;
    Complex s = 0.0;
    for (long n = n_max; n >= 1; --n) s += std::pow(z + static_cast<double>(n), -k) + std::pow(z - static_cast<double>(n), -k);
    if (z == 0.0) throw std::domain_error("monotangent: pole");
    s += std::pow(z, -k);
    partial.push_back(s);
  }
  return richardson(partial);
}

double MultitangentReduction::coefficient_value(int n) const {
  auto it = terms.find(n);
  if (it == terms.end()) return 0.0;
  double total = 0.0;
  for (const auto& [pair, c] : it->second) total += c.get_d() * cached_mzv(pair.first) * cached_mzv(pair.second);
  return total;
}

Complex MultitangentReduction::evaluate(Complex z, int q_order) const {
  Complex total = 0.0;
  for (const auto& [n, combo] : terms) total += coefficient_value(n) * monotangent(n, z, q_order).value;
  return total;
}

std::string MultitangentReduction::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, combo] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(";
    bool inner_first = true;
    for (const auto& [pair, c] : combo) {
      if (!inner_first) os << " + ";
      inner_first = false;
      os << to_string(c);
      if (!pair.first.empty()) os << "*z(" << pair.first.str() << ")";
      if (!pair.second.empty()) os << "*z(" << pair.second.str() << ")";
    }
    os << ")*Psi" << n;
  }
  return first ? "0" : os.str();
}

MultitangentReduction multitangent_reduce(const Index& a) {
  const std::size_t r = a.depth();
  if (r == 0 || a[0] < 2 || a[r - 1] < 2) throw std::invalid_argument("multitangent_reduce: boundary parts must be >= 2");
  for (int p : a.parts())
    if (p < 1) throw std::invalid_argument("multitangent_reduce: parts must be positive");
  MultitangentReduction out;
  out.index = a;
  const Index k = a.reversed();
  const int K = k.weight();
  std::vector<int> n(r);
  for (std::size_t i = 0; i < r; ++i) {
    // choose n_j >= k_j for j != i; n_i = K - sum is the monotangent order
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int used) {
      if (j == r) {
        const int ni = K - used;
        if (ni < 2) return;
        n[i] = ni;
        Integer c = 1;
        int sign_exp = k[i];
        for (std::size_t l = 0; l < r; ++l) {
          if (l != i) c *= binomial(n[l] - 1, k[l] - 1);
          if (l >= i) sign_exp += n[l];
        }
        if (c == 0) return;
        std::vector<int> left, right;
        for (std::size_t l = i; l-- > 0;) left.push_back(n[l]);
        for (std::size_t l = i + 1; l < r; ++l) right.push_back(n[l]);
        Rational coeff(c);
        if (sign_exp % 2) coeff = -coeff;
        auto& slot = out.terms[ni][{Index(left), Index(right)}];
        slot += coeff;
        return;
      }
      if (j == i) return rec(j + 1, used);
      for (int v = k[j]; used + v <= K - 2; ++v) {
        n[j] = v;
        rec(j + 1, used + v);
      }
    };
    rec(0, 0);
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();) jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

Estimate multitangent_direct(const Index& a, Complex z, long N) {
  std::vector<Complex> partial;
  const std::vector<Complex> u(a.depth(), z);
  for (int level = 0; level < 5; ++level) {
    const long n_max = (N << level) - 1;
    partial.push_back(nested_block_sum(a.parts(), u, -n_max, n_max));
  }
  return richardson(partial);
}

std::vector<WordDecomposition> word_decompositions(const Index& index) {
  const std::size_t r = index.depth();
  if (r == 0) return {WordDecomposition{}};
  std::vector<WordDecomposition> out;
  const std::size_t count = std::size_t{1} << (r - 1);
  for (std::size_t bits = 0; bits < count; ++bits) {
    WordDecomposition w;
    std::size_t start = 0;
    for (std::size_t j = 0; j + 1 < r; ++j) {
      const bool split = (bits >> (r - 2 - j)) & 1u;
      w.word.push_back(split ? 'y' : 'x');
      if (split) {
        w.blocks.push_back(index.slice(start, j + 1));
        w.starts.push_back(start);
        start = j + 1;
      }
    }
    w.blocks.push_back(index.slice(start, r));
    w.starts.push_back(start);
    out.push_back(std::move(w));
  }
  return out;
}

Complex word_contribution(const Index& index, const WordDecomposition& w, const std::vector<Complex>& shifts,
                          const ModularPoint& tau, int M, int N) {
  if (shifts.size() != index.depth()) throw std::invalid_argument("word_contribution: one shift per part");
  const std::size_t h = w.blocks.size();
  std::vector<Complex> acc(h + 1, 0.0);
  acc[0] = 1.0;
  for (int m = -(M - 1); m < M; ++m) {
    const Complex mt = static_cast<double>(m) * tau.tau();
    for (std::size_t b = h; b >= 1; --b) {
      const Index& blk = w.blocks[b - 1];
      std::vector<Complex> u;
      for (std::size_t j = 0; j < blk.depth(); ++j) u.push_back(shifts[w.starts[b - 1] + j] + mt);
      acc[b] += acc[b - 1] * nested_block_sum(blk.parts(), u, -(N - 1), N - 1);
    }
  }
  return acc[h];
}

Estimate meis_direct(const Index& index, const ModularPoint& tau, const EvalConfig& cfg) {
  require_lattice_admissible(index, "meis_direct");
  std::vector<ChainFactor> f;
  for (int k : index.parts()) f.push_back({k, 0.0});
  return lattice_chain_limit(f, tau, LatticeRegion::PositiveHalf, 1, cfg);
}

namespace {

struct BandValues {
  std::vector<Complex> value;  // index m = 1..Q
  std::vector<double> error;
  double tail = 0;             // bound on |value(m)| summed over m > Q
};

// Ordered sum over 0 < m_1 < ... < m_h <= Q of prod V_i(m_i), with error.
Estimate ordered_band_sum(const std::vector<const BandValues*>& v, int Q) {
  const std::size_t h = v.size();
  std::vector<Complex> acc(h + 1, 0.0);
  std::vector<double> err(h + 1, 0.0);
  acc[0] = 1.0;
  for (int m = 1; m <= Q; ++m)
    for (std::size_t b = h; b >= 1; --b) {
      const Complex x = v[b - 1]->value[m];
      const double e = v[b - 1]->error[m];
      err[b] += err[b - 1] * (std::abs(x) + e) + std::abs(acc[b - 1]) * e;
      acc[b] += acc[b - 1] * x;
    }
  double tail = 0;
  for (std::size_t b = 1; b <= h; ++b) tail += v[b - 1]->tail * (std::abs(acc[b - 1]) + err[b - 1] + 1.0);
  return {acc[h], err[h] + tail};
}

}  // namespace

Estimate meis_qexp(const Index& index, const ModularPoint& tau, const EvalConfig& cfg) {
  require_lattice_admissible(index, "meis_qexp");
  cfg.validate();
  const int Q = cfg.q_order;
  const std::size_t r = index.depth();
  const double abs_q = std::abs(tau.q());
  std::map<Index, BandValues> bands;
  auto band_of = [&](const Index& blk) -> const BandValues& {
    auto it = bands.find(blk);
    if (it != bands.end()) return it->second;
    const MultitangentReduction red = multitangent_reduce(blk);
    BandValues bv;
    bv.value.assign(Q + 1, 0.0);
    bv.error.assign(Q + 1, 0.0);
    double scale = 0;
    for (const auto& [n, combo] : red.terms) {
      const double c = red.coefficient_value(n);
      scale += std::abs(c) * lipschitz_scale(n);
      for (int m = 1; m <= Q; ++m) {
        double e = 0;
        const Complex psi = monotangent_lipschitz(n, static_cast<double>(m) * tau.tau(), std::max(1, Q / m), &e);
        bv.value[m] += c * psi;
        bv.error[m] += std::abs(c) * e + 1e-16 * std::abs(c * psi);
      }
    }
    bv.tail = scale * std::pow(abs_q, Q + 1) / (1 - abs_q) * 2.0;
    return bands.emplace(blk, std::move(bv)).first->second;
  };
  Complex total = 0.0;
  double error = 0.0;
  for (std::size_t t = 0; t <= r; ++t) {
    const Index head = index.slice(0, t), rest = index.slice(t, r);
    const double z = head.empty() ? 1.0 : cached_mzv(head);
    if (rest.empty()) {
      total += z;
      error += 1e-17 * std::abs(z);
      continue;
    }
    for (const WordDecomposition& w : word_decompositions(rest)) {
      std::vector<const BandValues*> v;
      for (const Index& blk : w.blocks) v.push_back(&band_of(blk));
      const Estimate e = ordered_band_sum(v, Q);
      total += z * e.value;
      error += std::abs(z) * e.error;
    }
  }
  if (!(error <= cfg.tolerance))
    throw std::runtime_error("meis_qexp: q_order " + std::to_string(Q) + " too small for the requested tolerance");
  return {total, error};
}

namespace {

void require_strip(Complex z, const ModularPoint& tau) {
  if (!(z.imag() > 0 && z.imag() < tau.tau().imag()))
    throw std::domain_error("g_function: requires 0 < Im z < Im tau");
}

}  // namespace

namespace {

// requires Im(z + m tau) > 0 for every m >= 1
Estimate g_series(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  if (index.empty()) return {1.0, 0.0};
  const int Q = cfg.q_order;
  const double abs_q = std::abs(tau.q());
  std::map<int, BandValues> bands;
  std::vector<const BandValues*> v;
  for (int k : index.parts()) {
    auto it = bands.find(k);
    if (it == bands.end()) {
      BandValues bv;
      bv.value.assign(Q + 1, 0.0);
      bv.error.assign(Q + 1, 0.0);
      for (int m = 1; m <= Q; ++m) {
        double e = 0;
        bv.value[m] = monotangent_lipschitz(k, z + static_cast<double>(m) * tau.tau(), 100000, &e);
        bv.error[m] = e + 1e-16 * std::abs(bv.value[m]);
      }
      bv.tail = 2.0 * std::abs(bv.value[Q]) * abs_q / (1 - abs_q);
      it = bands.emplace(k, std::move(bv)).first;
    }
    v.push_back(&it->second);
  }
  const Estimate e = ordered_band_sum(v, Q);
  if (!(e.error <= cfg.tolerance))
    throw std::runtime_error("g_function: q_order too small for the requested tolerance");
  return e;
}

}  // namespace

Estimate g_function(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  require_lattice_admissible(index, "g_function");
  require_strip(z, tau);
  cfg.validate();
  return g_series(index, z, tau, cfg);
}

Estimate g_function_reflected(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  require_lattice_admissible(index, "g_function");
  require_strip(z, tau);
  cfg.validate();
  return g_series(index, -z, tau, cfg);
}

Estimate g_function_direct(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  require_lattice_admissible(index, "g_function");
  require_strip(z, tau);
  cfg.validate();
  if (index.empty()) return {1.0, 0.0};
  const int Q = exponential_band_cutoff(tau, 0.0);
  std::map<int, BandValues> bands;
  std::vector<const BandValues*> v;
  for (int k : index.parts()) {
    auto it = bands.find(k);
    if (it == bands.end()) {
      BandValues bv;
      bv.value.assign(Q + 1, 0.0);
      bv.error.assign(Q + 1, 0.0);
      for (int m = 1; m <= Q; ++m) {
        const Estimate d = monotangent_direct(k, z + static_cast<double>(m) * tau.tau(), cfg.N);
        bv.value[m] = d.value;
        bv.error[m] = d.error;
      }
      it = bands.emplace(k, std::move(bv)).first;
    }
    v.push_back(&it->second);
  }
  return ordered_band_sum(v, Q);
}

}  // namespace mwp
