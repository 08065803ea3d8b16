#include "mwp/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace mwp {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
  while (static_cast<int>(table.size()) <= k) {
    const long n = static_cast<long>(table.size());
    Rational acc = 0;
    for (long j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * table[j];
    Rational b = -acc / Rational(n + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[k];
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace mwp
