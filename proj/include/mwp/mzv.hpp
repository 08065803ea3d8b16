#pragma once

#include <string>

#include "mwp/config.hpp"
#include "mwp/index.hpp"
#include "mwp/rational.hpp"

namespace mwp {

using BigFloat = mpf_class;

// zeta(k_1, ..., k_r) = sum_{0 < n_1 < ... < n_r} n_1^{-k_1} ... n_r^{-k_r}.
struct MzvValue {
  Index index;
  BigFloat value;
  double error = 0.0;  // absolute bound

  double approx() const { return value.get_d(); }
  std::string str(int digits) const;
};

// Requires k_r >= 2.  precision = significant decimal digits.  ζ(∅) = 1.
MzvValue mzv(const Index& index, int precision = 15);
inline double mzv_value(const Index& index) { return mzv(index).approx(); }

// zeta(k) = c pi^k for even k >= 2; returns c = (-1)^{k/2+1} 2^{k-1} B_k / k!.
Rational zeta_even_exact(int k);

// zeta^{(z)}(k_1..k_r) = sum_{0 < n_1 < ... < n_r} prod (z + n_i)^{-k_i}.
struct HurwitzValue {
  Index index;
  Complex value;
  double error = 0.0;
};
// Double precision at best; the reported error is what was reached.
HurwitzValue hurwitz_mzv(const Index& index, Complex z, int precision = 15);

// Plain truncated sum with n_r <= T, no tail treatment.
Complex hurwitz_mzv_partial(const Index& index, Complex z, long T);

}  // namespace mwp
