#include "mwp/mzv.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mwp {

namespace {

// A word in x0, x1 as a string of '0'/'1'.
std::string word_of(const Index& decreasing) {
  std::string w;
  for (int s : decreasing.parts()) {
    w.append(static_cast<std::size_t>(s - 1), '0');
    w.push_back('1');
  }
  return w;
}

// Word ending in '1' back to its exponent list.
std::vector<int> exponents_of(const std::string& w) {
  std::vector<int> s;
  int run = 1;
  for (char c : w) {
    if (c == '0') {
      ++run;
    } else {
      s.push_back(run);
      run = 1;
    }
  }
  return s;
}

std::string swap_reverse(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = c == '0' ? '1' : '0';
  return out;
}

struct Partial {
  BigFloat value;
  double error;
};

// Li_{s_1..s_d}(1/2) = sum_{n_1 > ... > n_d >= 1} 2^{-n_1} / prod n_i^{s_i}.
Partial polylog_half(const std::vector<int>& s, int digits, mp_bitcnt_t bits) {
  if (s.empty()) return {BigFloat(1, bits), 0.0};
  const int d = static_cast<int>(s.size());
  // tail after N is at most 4 * 2^{-N} (1 + ln(N+1))^{d-1}
  const double target = std::pow(10.0, -digits - 4);
  long N = 8;
  auto tail = [d](long n) { return 4.0 * std::ldexp(std::pow(1.0 + std::log(n + 1.0), d - 1), -static_cast<int>(n)); };
  while (tail(N) > target) N += 8;
  std::vector<BigFloat> partial(d + 1, BigFloat(0, bits));  // partial[j] = sum_{m<n} a_j(m)
  std::vector<BigFloat> a(d, BigFloat(0, bits));
  BigFloat total(0, bits), weight(1, bits), inv(0, bits), p(0, bits);
  for (long n = 1; n <= N; ++n) {
    weight /= 2;
    inv = 1;
    inv /= static_cast<unsigned long>(n);
    for (int j = d - 1; j >= 0; --j) {
      mpf_pow_ui(p.get_mpf_t(), inv.get_mpf_t(), static_cast<unsigned long>(s[j]));
      a[j] = j == d - 1 ? p : BigFloat(p * partial[j + 1]);
    }
    for (int j = 0; j < d; ++j) partial[j] += a[j];
    total += weight * a[0];
  }
  return {total, tail(N)};
}

mp_bitcnt_t bits_for(int digits) { return static_cast<mp_bitcnt_t>(std::ceil(digits * 3.3219280948873623)) + 64; }

}  // namespace

std::string MzvValue::str(int digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

MzvValue mzv(const Index& index, int precision) {
  if (precision < 1) throw std::invalid_argument("mzv: precision must be positive");
  for (int k : index.parts())
    if (k < 1) throw std::invalid_argument("mzv: parts must be positive");
  const mp_bitcnt_t bits = bits_for(precision);
  if (index.empty()) return {index, BigFloat(1, bits), 0.0};
  if (!index.admissible_for_mzv()) throw std::invalid_argument("mzv: last part must be >= 2 for convergence");
  // word of the decreasing-order sum, split at 1/2 into two convergent halves
  const std::string w = word_of(index.reversed());
  BigFloat total(0, bits);
  double error = 0.0;
  for (std::size_t j = 0; j <= w.size(); ++j) {
    const Partial left = polylog_half(exponents_of(swap_reverse(w.substr(0, j))), precision, bits);
    const Partial right = polylog_half(exponents_of(w.substr(j)), precision, bits);
    total += left.value * right.value;
    const double l = std::abs(left.value.get_d()), r = std::abs(right.value.get_d());
    error += l * right.error + r * left.error + left.error * right.error;
  }
  error += std::ldexp(static_cast<double>(w.size() + 1), -static_cast<int>(bits) + 8);
  return {index, total, error};
}

Rational zeta_even_exact(int k) {
  if (k < 2 || k % 2) throw std::invalid_argument("zeta_even_exact: k must be even and >= 2");
  Rational c = bernoulli(k) / Rational(factorial(k));
  c *= Rational(Integer(1) << (k - 1));
  if ((k / 2) % 2 == 0) c = -c;
  return c;
}

Complex hurwitz_mzv_partial(const Index& index, Complex z, long T) {
  using C = std::complex<long double>;
  const int d = static_cast<int>(index.depth());
  if (d == 0) return 1.0;
  std::vector<C> partial(d + 1, C(0));
  std::vector<C> a(d);
  for (long n = 1; n <= T; ++n) {
    const C u = C(z) + static_cast<long double>(n);
    for (int j = 0; j < d; ++j) {
      const C p = std::pow(u, -index[j]);
      a[j] = j == 0 ? p : p * partial[j - 1];
    }
    for (int j = 0; j < d; ++j) partial[j] += a[j];
  }
  return Complex(partial[d - 1]);
}

HurwitzValue hurwitz_mzv(const Index& index, Complex z, int precision) {
  for (int k : index.parts())
    if (k < 1) throw std::invalid_argument("hurwitz_mzv: parts must be positive");
  if (index.empty()) return {index, 1.0, 0.0};
  if (!index.admissible_for_mzv()) throw std::invalid_argument("hurwitz_mzv: last part must be >= 2");
  if (std::abs(z.imag()) < 1e-14 && z.real() <= -1 + 1e-14 &&
      std::abs(z.real() - std::round(z.real())) < 1e-14)
    throw std::domain_error("hurwitz_mzv: pole at a negative integer shift");
  if (std::abs(z) == 0.0) {
    const MzvValue v = mzv(index, std::max(precision, 15));
    return {index, v.approx(), v.error + 1e-16 * std::abs(v.approx())};
  }
  // Richardson extrapolation in 1/T over T0 2^j; the tail has an asymptotic
  // expansion in powers of 1/T when all parts are >= 2.
  constexpr int kLevels = 6;
  const long T0 = 64 + 4 * static_cast<long>(std::ceil(std::abs(z)));
  std::vector<Complex> s;
  for (int j = 0; j < kLevels; ++j) s.push_back(hurwitz_mzv_partial(index, z, T0 << j));
  std::vector<Complex> prev = s;
  Complex best = s.back();
  double err = INFINITY;
  for (int p = 1; p < kLevels; ++p) {
    std::vector<Complex> next;
    const double f = std::ldexp(1.0, p);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back((f * prev[i + 1] - prev[i]) / (f - 1));
    const double e = std::abs(next.back() - prev.back());
    if (e < err) {
      err = e;
      best = next.back();
    }
    prev = std::move(next);
  }
  return {index, best, err + 1e-15 * std::abs(best)};
}

}  // namespace mwp
