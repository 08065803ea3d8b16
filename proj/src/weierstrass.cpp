#include "mwp/weierstrass.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "mwp/lattice.hpp"

namespace mwp {

namespace {

constexpr double kSeriesDisc = 0.8;
constexpr int kMaxBands = 200000;

bool converged_pair(int m, const ModularPoint& tau, double im_z, Complex term, Complex total) {
  return m * tau.tau().imag() > std::abs(im_z) + 1.0 &&
         std::abs(term) <= 1e-18 * std::max(std::abs(total), 1e-300);
}

// z - (m tau + n) for the lattice point nearest z.
Complex reduce_mod_lattice(Complex z, const ModularPoint& tau) {
  const Complex t = tau.tau();
  const double m = std::round(z.imag() / t.imag());
  z -= m * t;
  z -= std::round(z.real());
  return z;
}

void require_off_lattice(Complex z, const ModularPoint& tau, const char* who) {
  const Complex r = reduce_mod_lattice(z, tau);
  const Complex t = tau.tau();
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      if (std::abs(r - (static_cast<double>(a) * t + Complex(b))) < 1e-13)
        throw std::domain_error(std::string(who) + ": argument on the lattice");
}

}  // namespace

double zeta_even_value(int k) {
  if (k < 2 || k % 2) throw std::invalid_argument("zeta_even_value: k must be even and >= 2");
  if (k < 20) {
    // zeta(k) = (-1)^{k/2+1} B_k (2 pi)^k / (2 k!)
    const double b = to_double(bernoulli(k));
    const double s = (k / 2 % 2) ? 1.0 : -1.0;
    return s * b * std::pow(2 * kPi, k) / (2.0 * to_double(Rational(factorial(k))));
  }
  double sum = 1.0;
  for (int n = 2;; ++n) {
    const double t = std::pow(static_cast<double>(n), -k);
    sum += t;
    if (t < 1e-19) break;
  }
  return sum;
}

Complex eisenstein_G(int k, const ModularPoint& tau, const EvalConfig& cfg) {
  if (k < 2) throw std::invalid_argument("eisenstein_G: weight must be >= 2");
  cfg.validate();
  if (k % 2) return 0.0;
  Complex total = 2.0 * zeta_even_value(k);
  for (int m = 1; m <= kMaxBands; ++m) {
    const Complex term = 2.0 * monotangent_value(k, static_cast<double>(m) * tau.tau());
    total += term;
    if (converged_pair(m, tau, 0.0, term, total)) break;
  }
  return total;
}

Estimate eisenstein_G_direct(int k, const ModularPoint& tau, const EvalConfig& cfg) {
  if (k < 2) throw std::invalid_argument("eisenstein_G: weight must be >= 2");
  cfg.validate();
  if (k % 2) return {0.0, 0.0};
  Estimate e = lattice_chain_limit({ChainFactor{k, 0.0}}, tau, LatticeRegion::PositiveHalf, 1, cfg);
  return {2.0 * e.value, 2.0 * e.error};
}

std::vector<Complex> eisenstein_table(const ModularPoint& tau, int max_weight) {
  static std::mutex mu;
  static std::map<std::pair<double, double>, std::vector<Complex>> cache;
  const std::pair<double, double> key{tau.tau().real(), tau.tau().imag()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && static_cast<int>(it->second.size()) > max_weight)
      return {it->second.begin(), it->second.begin() + max_weight + 1};
  }
  std::vector<Complex> table{Complex(-1.0), Complex(0.0)};
  for (int k = 2; k <= max_weight; ++k) table.push_back(eisenstein_G(k, tau));
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (slot.size() < table.size()) slot = table;
  table.resize(max_weight + 1);
  return table;
}

namespace {

Complex sigma_product(Complex z, const ModularPoint& tau) {
  const Complex s = std::sin(kPi * z);
  const Complex s2 = s * s;
  Complex prod = s / kPi;
  for (int m = 1; m <= kMaxBands; ++m) {
    const Complex sm = std::sin(kPi * static_cast<double>(m) * tau.tau());
    const Complex ratio = s2 / (sm * sm);
    prod *= 1.0 - ratio;
    if (m * tau.tau().imag() > std::abs(z.imag()) + 1.0 && std::abs(ratio) < 1e-18) break;
  }
  return prod;
}

// sum_{n even >= 2} G_n z^n / n.
Complex sigma_log_series(Complex z, const ModularPoint& tau, int derivative) {
  int max_weight = 16;
  std::vector<Complex> g = eisenstein_table(tau, max_weight);
  // cutoff from |G_n| ~ c r0^{-n}; single terms may vanish, e.g. G_6(i) = 0
  const double ratio = std::abs(z) / tau.shortest_vector();
  const int last = ratio > 0 ? std::min(600, static_cast<int>(std::log(1e-20) / std::log(ratio)) + 4) : 2;
  Complex total = 0.0;
  Complex zp = z;  // z^{n-1}
  for (int n = 2; n <= last; n += 2) {
    if (n > max_weight) {
      max_weight *= 2;
      g = eisenstein_table(tau, max_weight);
    }
    zp *= (n == 2 ? 1.0 : z * z);
    const Complex term = derivative ? g[n] * zp : g[n] * zp * z / static_cast<double>(n);
    total += term;
  }
  return total;
}

void require_in_disc(Complex z, const ModularPoint& tau, const char* who) {
  if (!(std::abs(z) < kSeriesDisc * tau.shortest_vector()))
    throw std::domain_error(std::string(who) + ": series form requested outside its disc");
}

}  // namespace

Complex sigma(Complex z, const ModularPoint& tau, const EvalConfig& cfg, SigmaForm form) {
  cfg.validate();
  if (z == Complex(0.0)) return 0.0;
  const bool inside = std::abs(z) < kSeriesDisc * tau.shortest_vector();
  if (form == SigmaForm::Series) require_in_disc(z, tau, "sigma");
  if (form == SigmaForm::Series || (form == SigmaForm::Auto && inside))
    return z * std::exp(-sigma_log_series(z, tau, 0));
  return sigma_product(z, tau);
}

Complex weier_zeta(Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  cfg.validate();
  require_off_lattice(z, tau, "weier_zeta");
  Complex total = pi_cot(z);
  for (int m = 1; m <= kMaxBands; ++m) {
    const Complex mt = static_cast<double>(m) * tau.tau();
    const Complex pair = pi_cot(z + mt) + pi_cot(z - mt);
    total += pair;
    if (converged_pair(m, tau, z.imag(), pair, total)) break;
  }
  return total;
}

Complex weier_zeta_series(Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  cfg.validate();
  require_in_disc(z, tau, "weier_zeta_series");
  if (z == Complex(0.0)) throw std::domain_error("weier_zeta_series: argument on the lattice");
  return 1.0 / z - sigma_log_series(z, tau, 1);
}

QuasiPeriods quasi_periods(const ModularPoint& tau, const EvalConfig& cfg, Complex base) {
  const Complex z0 = weier_zeta(base, tau, cfg);
  return {weier_zeta(base + 1.0, tau, cfg) - z0, weier_zeta(base + tau.tau(), tau, cfg) - z0};
}

Complex wp_k(int k, Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  if (k < 2) throw std::invalid_argument("wp_k: order must be >= 2");
  cfg.validate();
  require_off_lattice(z, tau, "wp_k");
  z = reduce_mod_lattice(z, tau);
  Complex total = monotangent_value(k, z);
  for (int m = 1; m <= kMaxBands; ++m) {
    const Complex mt = static_cast<double>(m) * tau.tau();
    const Complex pair = monotangent_value(k, z + mt) + monotangent_value(k, z - mt);
    total += pair;
    if (converged_pair(m, tau, z.imag(), pair, total)) break;
  }
  return total;
}

Complex wp(Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  return wp_k(2, z, tau, cfg) - eisenstein_table(tau, 2)[2];
}

Complex wp_prime(Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  return -2.0 * wp_k(3, z, tau, cfg);
}

std::vector<Complex> laurent_coefficients(const std::function<Complex(Complex)>& f, Complex center,
                                          double radius, int lo, int hi, int nodes) {
  if (hi < lo) throw std::invalid_argument("laurent_coefficients: empty range");
  if (nodes <= 0) nodes = 4 * (hi - lo + 8);
  std::vector<Complex> values(nodes);
  for (int j = 0; j < nodes; ++j)
    values[j] = f(center + std::polar(radius, 2 * kPi * j / nodes));
  std::vector<Complex> out;
  for (int n = lo; n <= hi; ++n) {
    Complex acc = 0.0;
    for (int j = 0; j < nodes; ++j) acc += values[j] * std::polar(std::pow(radius, -n), -2 * kPi * j * n / nodes);
    out.push_back(acc / static_cast<double>(nodes));
  }
  return out;
}

double laurent_radius(const ModularPoint& tau) { return 0.25 * tau.shortest_vector(); }

// ---------------------------------------------------------------------------

WpPolynomial WpPolynomial::wp_power(int s, const SymPoly& c) {
  WpPolynomial p;
  p.add(s, 0, c);
  return p;
}

WpPolynomial WpPolynomial::wp_prime_times_power(int s, const SymPoly& c) {
  WpPolynomial p;
  p.add(s, 1, c);
  return p;
}

WpPolynomial WpPolynomial::constant(const SymPoly& c) { return wp_power(0, c); }

SymPoly WpPolynomial::coefficient(int s, int t) const {
  auto it = terms_.find({s, t});
  return it == terms_.end() ? SymPoly() : it->second;
}

int WpPolynomial::degree_in_wp(int t) const {
  int d = -1;
  for (const auto& [key, c] : terms_)
    if (key.second == t) d = std::max(d, key.first);
  return d;
}

void WpPolynomial::add(int s, int t, const SymPoly& c) {
  if (s < 0 || t < 0 || t > 1) throw std::invalid_argument("WpPolynomial: bad monomial");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace({s, t}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WpPolynomial& WpPolynomial::operator+=(const WpPolynomial& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

WpPolynomial& WpPolynomial::operator-=(const WpPolynomial& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

namespace {

// (wp')^2 = 4 wp^3 - 60 G_4 wp - 140 G_6, times c wp^s.
void add_wp_prime_squared(WpPolynomial& out, int s, const SymPoly& c) {
  out.add(s + 3, 0, c * Rational(4));
  out.add(s + 1, 0, c * SymPoly::G(4) * Rational(-60));
  out.add(s, 0, c * SymPoly::G(6) * Rational(-140));
}

}  // namespace

WpPolynomial operator*(const WpPolynomial& a, const WpPolynomial& b) {
  WpPolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      const int s = ka.first + kb.first;
      const int t = ka.second + kb.second;
      if (t == 2)
        add_wp_prime_squared(out, s, ca * cb);
      else
        out.add(s, t, ca * cb);
    }
  return out;
}

WpPolynomial operator*(WpPolynomial a, const SymPoly& c) {
  WpPolynomial out;
  for (const auto& [k, v] : a.terms_) out.add(k.first, k.second, v * c);
  return out;
}

WpPolynomial WpPolynomial::derivative() const {
  WpPolynomial out;
  for (const auto& [key, c] : terms_) {
    const auto [s, t] = key;
    if (t == 0) {
      if (s > 0) out.add(s - 1, 1, c * Rational(s));
      continue;
    }
    // d(wp^s wp') = s wp^{s-1} wp'^2 + wp^s (6 wp^2 - 30 G_4)
    if (s > 0) add_wp_prime_squared(out, s - 1, c * Rational(s));
    out.add(s + 2, 0, c * Rational(6));
    out.add(s, 0, c * SymPoly::G(4) * Rational(-30));
  }
  return out;
}

WpPolynomial WpPolynomial::map_coefficients(const std::function<SymPoly(const SymPoly&)>& f) const {
  WpPolynomial out;
  for (const auto& [key, c] : terms_) out.add(key.first, key.second, f(c));
  return out;
}

WpPolynomial WpPolynomial::reduce_to_g4_g6() const {
  return map_coefficients([](const SymPoly& c) { return c.reduce_to_g4_g6(); });
}

SymPoly WpPolynomial::to_sympoly() const {
  SymPoly out;
  for (const auto& [key, c] : terms_)
    out += c * SymPoly::P().pow(key.first) * SymPoly::Pd().pow(key.second);
  return out;
}

Complex WpPolynomial::evaluate(Complex wp_value, Complex wp_prime_value,
                               const std::function<Complex(const Symbol&)>& symbol_value) const {
  Complex total = 0.0;
  for (const auto& [key, c] : terms_) {
    Complex mono = std::pow(wp_value, key.first);
    if (key.second) mono *= wp_prime_value;
    total += mono * c.evaluate<Complex>(symbol_value);
  }
  return total;
}

namespace {

std::function<Complex(const Symbol&)> g_symbol_values(const ModularPoint& tau, int max_weight) {
  auto table = std::make_shared<std::vector<Complex>>(eisenstein_table(tau, std::max(max_weight, 2)));
  return [table](const Symbol& s) -> Complex {
    if (s.kind != Symbol::Kind::G) throw std::invalid_argument("expected a G symbol, got " + s.str());
    const int n = s.index[0];
    if (n >= static_cast<int>(table->size())) throw std::logic_error("G table too short");
    return (*table)[n];
  };
}

int max_g_weight(const SymPoly& p) {
  int w = 2;
  for (const auto& [mono, c] : p.terms())
    for (const Symbol& s : mono)
      if (s.kind == Symbol::Kind::G) w = std::max(w, s.index[0]);
  return w;
}

}  // namespace

Complex WpPolynomial::evaluate(Complex z, const ModularPoint& tau, const EvalConfig& cfg) const {
  int w = 2;
  for (const auto& [key, c] : terms_) w = std::max(w, max_g_weight(c));
  const Complex p = wp(z, tau, cfg);
  const Complex pd = wp_prime(z, tau, cfg);
  return evaluate(p, pd, g_symbol_values(tau, w));
}

std::string WpPolynomial::str() const { return to_sympoly().str(); }

Complex evaluate_g_symbols(const SymPoly& p, const ModularPoint& tau) {
  return p.evaluate<Complex>(g_symbol_values(tau, max_g_weight(p)));
}

// ---------------------------------------------------------------------------

WpPolynomial wp_deriv_poly(int k) {
  if (k < 1) throw std::invalid_argument("wp_deriv_poly: k must be >= 1");
  WpPolynomial alpha = WpPolynomial::wp_power(1) + WpPolynomial::constant(SymPoly::G(2));
  for (int step = 1; step < k; ++step) {
    WpPolynomial next;
    for (const auto& [key, a] : alpha.terms()) {
      const int q = key.first;
      if (q < 1) continue;
      next.add(q + 1, 0, a * Rational(2 * q * (2 * q + 1)));
      next.add(q - 1, 0, a * SymPoly::G(4) * Rational(-30 * q * (2 * q - 1)));
      if (q >= 2) next.add(q - 2, 0, a * SymPoly::G(6) * Rational(-140 * q * (q - 1)));
    }
    alpha = std::move(next);
  }
  return alpha;
}

WpPolynomial wp2_derivative(int n) {
  if (n < 0) throw std::invalid_argument("wp2_derivative: negative order");
  if (n % 2 == 0) return wp_deriv_poly(n / 2 + 1);
  return wp_deriv_poly((n - 1) / 2 + 1).derivative();
}

TraceForms wp_deriv_trace_form(int k) {
  if (k < 1) throw std::invalid_argument("wp_deriv_trace_form: k must be >= 1");
  const Rational fact(factorial(2 * k - 1));
  std::vector<SymPoly> xw, xe;
  for (int j = 1; j <= k; ++j) {
    std::vector<int> twos(j, 2);
    xw.push_back(SymPoly::Wp(Index(twos)) * Rational(j % 2 ? 1 : -1));
    xe.push_back(j == 1 ? SymPoly::P() : SymPoly::G(2 * j) * Rational(-(2 * j - 1)));
  }
  TraceForms out;
  out.in_multiple_wp = partition_trace(TraceWeight::PhiLog, xw, k) * (fact * k);
  out.in_eisenstein = (SymPoly::G(2 * k) + partition_trace(TraceWeight::PhiLog, xe, k) * Rational(k)) * fact;
  return out;
}

SymPoly repeated_leading(int h, int r) {
  if (h < 2 || r < 1) throw std::invalid_argument("repeated_leading: need h >= 2, r >= 1");
  std::vector<SymPoly> x;
  for (int k = 1; k <= r - 1; ++k) {
    const int w = h * k;
    x.push_back(w % 2 ? SymPoly() : SymPoly::G(w) * Rational(k % 2 ? 1 : -1));
  }
  return partition_trace(TraceWeight::Beta, x, r - 1);
}

SymPoly repeated_f(int r) { return repeated_leading(2, r); }

SymPoly repeated_g(int r) {
  if (r < 1) throw std::invalid_argument("repeated_g: r must be >= 1");
  SymPoly g = repeated_f(r + 1);
  for (int s = 0; s <= r - 1; ++s) {
    const int d = r - s;
    g += SymPoly::G(2 * d) * repeated_f(s + 1) * Rational((d % 2 ? -1 : 1) * (2 * d - 1));
  }
  return g;
}

SymPoly repeated_ghat(int r) { return repeated_g(r) + SymPoly::G(2) * repeated_f(r); }

WpPolynomial repeated_index_via_derivatives(int h, int r) {
  if (h < 2 || r < 1) throw std::invalid_argument("repeated_index: need h >= 2, r >= 1");
  std::vector<WpPolynomial> a;  // a[k-1] = (-1)^{hk-1} h/(hk)! wp_2^{(hk-2)}
  for (int k = 1; k <= r; ++k) {
    const Rational c = Rational((h * k) % 2 ? h : -h) / Rational(factorial(h * k));
    a.push_back(wp2_derivative(h * k - 2) * SymPoly(c));
  }
  WpPolynomial total;
  for (const Partition& lambda : partitions(r)) {
    WpPolynomial term = WpPolynomial::constant(SymPoly(1));
    Rational weight(1);
    for (const auto& [part, m] : lambda.multiplicities()) {
      weight /= Rational(factorial(m));
      for (int i = 0; i < m; ++i) term = term * a[part - 1];
    }
    total += term * SymPoly(weight);
  }
  return total * SymPoly(Rational(r % 2 ? -1 : 1));
}

WpPolynomial repeated_index_closed_form(int h, int r) {
  if (h < 2 || r < 1) throw std::invalid_argument("repeated_index: need h >= 2, r >= 1");
  if (h == 2) return WpPolynomial::wp_power(1, repeated_f(r)) + WpPolynomial::constant(repeated_ghat(r));
  if (h == 3 && r % 2 == 1) {
    std::vector<SymPoly> x;
    for (int j = 1; j <= (r - 1) / 2; ++j) x.push_back(SymPoly::G(6 * j) * Rational(-1));
    const SymPoly c = partition_trace(TraceWeight::BetaPrime, x, (r - 1) / 2);
    return WpPolynomial::wp_prime_times_power(0, c * Rational(-1, 2));  // wp_3 = -wp'/2
  }
  return repeated_index_via_derivatives(h, r);
}

}  // namespace mwp
