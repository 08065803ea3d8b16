#include "mwp/lattice.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace mwp {

namespace {

// P_k with Psi_k(u) = pi^k P_k(cot(pi u)):  P_1 = c,  P_{k+1} = (1+c^2) P_k' / k.
const std::vector<double>& cot_polynomial(int k) {
  static std::mutex mu;
  static std::vector<std::vector<Rational>> exact{{Rational(0), Rational(1)}};
  static std::vector<std::vector<double>> approx{{0.0, 1.0}};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(exact.size()) < k) {
    const auto& p = exact.back();
    const long kk = static_cast<long>(exact.size());
    std::vector<Rational> dp(p.size() > 1 ? p.size() - 1 : 1, Rational(0));
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * Rational(static_cast<long>(i));
    std::vector<Rational> next(dp.size() + 2, Rational(0));
    for (std::size_t i = 0; i < dp.size(); ++i) {
      next[i] += dp[i];
      next[i + 2] += dp[i];
    }
    for (auto& c : next) c /= Rational(kk);
    exact.push_back(next);
    std::vector<double> d;
    for (auto& c : next) d.push_back(c.get_d());
    approx.push_back(std::move(d));
  }
  return approx[k - 1];
}

Complex horner(const std::vector<double>& p, Complex x) {
  Complex acc = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace

Complex pi_cot(Complex u) {
  const Complex w = kPi * u;
  if (w.imag() >= 0) {
    const Complex e = std::exp(Complex(0, 2) * w);  // |e| <= 1
    return kPi * Complex(0, 1) * (e + 1.0) / (e - 1.0);
  }
  const Complex e = std::exp(Complex(0, -2) * w);
  return kPi * Complex(0, 1) * (1.0 + e) / (1.0 - e);
}

Complex monotangent_lipschitz(int k, Complex u, int max_terms, double* error) {
  if (k < 1) throw std::invalid_argument("monotangent order must be >= 1");
  if (!(u.imag() > 0)) throw std::domain_error("Lipschitz form requires Im(u) > 0");
  const double log_abs_xi = -2.0 * kPi * u.imag();
  const Complex xi_phase = std::exp(Complex(0, 2.0 * kPi * u.real()));
  const double log_c = k * std::log(2.0 * kPi) - std::lgamma(static_cast<double>(k));
  // (-i)^k
  static const Complex minus_i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  const Complex phase_c = minus_i_pow[k % 4];
  const double peak = (k - 1) / -log_abs_xi;
  Complex sum = 0.0;
  Complex phase = 1.0;
  double last = 0.0;
  int d = 1;
  for (; d <= max_terms; ++d) {
    phase *= xi_phase;
    const double log_mag = log_c + (k - 1) * std::log(static_cast<double>(d)) + d * log_abs_xi;
    const double mag = std::exp(log_mag);
    sum += mag * phase;
    last = mag;
    if (d > peak && mag <= 1e-18 * std::abs(sum) + 1e-300) {
      ++d;
      break;
    }
  }
  if (error) {
    // tail after the last term is bounded by a geometric series once past the peak
    const double ratio = std::exp(log_abs_xi) * std::pow(1.0 + 1.0 / d, k - 1);
    *error = ratio < 1 ? last * ratio / (1 - ratio) : INFINITY;
  }
  return phase_c * sum;
}

Complex monotangent_value(int k, Complex u) {
  if (k < 1) throw std::invalid_argument("monotangent order must be >= 1");
  constexpr double kSwitch = 0.3;
  if (u.imag() > kSwitch) return monotangent_lipschitz(k, u, 100000);
  if (u.imag() < -kSwitch) return (k % 2 ? -1.0 : 1.0) * monotangent_lipschitz(k, -u, 100000);
  const Complex c = pi_cot(u) / kPi;
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw std::domain_error("monotangent evaluated at an integer");
  return std::pow(kPi, k) * horner(cot_polynomial(k), c);
}

int exponential_band_cutoff(const ModularPoint& tau, double max_abs_imag_shift) {
  return static_cast<int>(std::ceil((max_abs_imag_shift + 6.5) / tau.tau().imag())) + 1;
}

Complex lattice_chain_sum(const std::vector<ChainFactor>& factors, const ModularPoint& tau,
                          LatticeRegion region, int sign, int M, int N) {
  const std::size_t r = factors.size();
  if (r == 0) return 1.0;
  // distinct shifts share one reciprocal per lattice point
  std::vector<Complex> shifts;
  std::vector<std::size_t> slot(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t s = 0;
    while (s < shifts.size() && shifts[s] != factors[j].shift) ++s;
    if (s == shifts.size()) shifts.push_back(factors[j].shift);
    slot[j] = s;
  }
  std::vector<Complex> inv(shifts.size());
  std::vector<Complex> acc(r + 1, 0.0);
  acc[0] = 1.0;
  const Complex t = tau.tau();
  const double sgn = sign >= 0 ? 1.0 : -1.0;
  const int m_lo = region == LatticeRegion::Full ? -(M - 1) : (region == LatticeRegion::PositiveHalf ? 0 : 1);
  for (int m = m_lo; m < M; ++m) {
    const int n_lo = (region == LatticeRegion::PositiveHalf && m == 0) ? 1 : -(N - 1);
    for (int n = n_lo; n < N; ++n) {
      const Complex w = Complex(static_cast<double>(m)) * t + static_cast<double>(n);
      for (std::size_t s = 0; s < shifts.size(); ++s) {
        const Complex d = shifts[s] + sgn * w;
        if (d == 0.0) throw std::domain_error("lattice chain sum hits a lattice point");
        inv[s] = 1.0 / d;
      }
      for (std::size_t j = r; j >= 1; --j) {
        const Complex& x = inv[slot[j - 1]];
        Complex p = x;
        for (int e = 1; e < factors[j - 1].k; ++e) p *= x;
        acc[j] += acc[j - 1] * p;
      }
    }
  }
  return acc[r];
}

namespace {
constexpr int kRichardsonLevels = 5;
}  // namespace

Estimate richardson(const std::vector<Complex>& s) {
  if (s.empty()) throw std::invalid_argument("richardson: no partial sums");
  std::vector<std::vector<Complex>> table(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    table[j].push_back(s[j]);
    for (std::size_t p = 1; p <= j; ++p) {
      const double f = std::ldexp(1.0, static_cast<int>(p));
      table[j].push_back((f * table[j][p - 1] - table[j - 1][p - 1]) / (f - 1.0));
    }
  }
  const std::size_t L = s.size() - 1;
  Estimate out;
  out.value = table[L][L];
  out.error = L >= 1 ? std::abs(table[L][L] - table[L][L - 1]) : INFINITY;
  return out;
}

Estimate lattice_chain_limit(const std::vector<ChainFactor>& factors, const ModularPoint& tau,
                             LatticeRegion region, int sign, const EvalConfig& cfg) {
  cfg.validate();
  if (factors.empty()) return {1.0, 0.0};
  double max_im = 0.0;
  for (const auto& f : factors) max_im = std::max(max_im, std::abs(f.shift.imag()));
  const int needed = exponential_band_cutoff(tau, max_im);
  const int M1 = std::min(cfg.M, needed);
  const int M2 = M1 + std::max(2, M1 / 4);
  auto limit_at = [&](int M) {
    const double reach = M * std::abs(tau.tau()) + max_im + 1.0;
    const int N0 = std::max(cfg.N, static_cast<int>(std::ceil(60.0 * reach)));
    std::vector<Complex> partial;
    for (int level = 0; level < kRichardsonLevels; ++level)
      partial.push_back(lattice_chain_sum(factors, tau, region, sign, M, N0 << level));
    return richardson(partial);
  };
  const Estimate coarse = limit_at(M1);
  const Estimate fine = limit_at(M2);
  return {fine.value, fine.error + std::abs(fine.value - coarse.value)};
}

}  // namespace mwp
