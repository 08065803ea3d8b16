#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace mwp {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

// Binomial coefficient with the lattice-sum convention: zero whenever
// n < 0, k < 0 or k > n.  Callers rely on this to drop terms whose
// indices would fall below the admissible range.
Integer binomial(long n, long k);

Integer factorial(long n);

// B_k with B_1 = -1/2.
Rational bernoulli(int k);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace mwp
