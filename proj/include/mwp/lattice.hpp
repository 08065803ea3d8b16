#pragma once

#include <vector>

#include "mwp/config.hpp"
#include "mwp/index.hpp"

namespace mwp {

// Psi_k(u) = sum_{n in Z} (u+n)^{-k}, symmetric partial sums for k = 1.
// Uses the Lipschitz q-form away from the real axis and the cot-polynomial
// closed form near it.
Complex monotangent_value(int k, Complex u);

// Lipschitz form: Psi_k(u) = (-2 pi i)^k/(k-1)! sum_{d>=1} d^{k-1} e^{2 pi i d u},
// Im(u) > 0, truncated after max_terms terms.  error receives a tail bound.
Complex monotangent_lipschitz(int k, Complex u, int max_terms, double* error = nullptr);

// pi cot(pi u), stable for large |Im u|.
Complex pi_cot(Complex u);

// Which lattice points |m| < M, |n| < N enter an ordered chain sum.
enum class LatticeRegion {
  Full,          // all w
  PositiveHalf,  // 0 < w in the order (m > 0, or m = 0 and n > 0)
  UpperBands,    // m > 0, any n
};

// One factor (shift + sign*w)^{-k} of an ordered lattice chain.
struct ChainFactor {
  int k;
  Complex shift;
};

// Truncated ordered chain sum
//   sum_{w_1 < ... < w_r in region, |m|<M, |n|<N} prod_j (shift_j + sign*w_j)^{-k_j}
// with < the (m, n)-lexicographic order.  Throws on a lattice hit.
Complex lattice_chain_sum(const std::vector<ChainFactor>& factors, const ModularPoint& tau,
                          LatticeRegion region, int sign, int M, int N);

// Extrapolate partial sums taken at N, 2N, 4N, ... assuming an expansion in
// powers of 1/N; the error is the difference of the last two diagonal entries.
Estimate richardson(const std::vector<Complex>& partial_sums);

// Iterated limit: Richardson extrapolation over N, 2N, 4N, ... at fixed outer
// cutoff, repeated at a wider outer cutoff; the reported error is the sum of
// the extrapolation spread and the outer-refinement difference.
Estimate lattice_chain_limit(const std::vector<ChainFactor>& factors, const ModularPoint& tau,
                             LatticeRegion region, int sign, const EvalConfig& cfg);

// Outer cutoff at which bands |m| >= M contribute below ~1e-17 after the
// inner limit, given the largest |Im| among the shifts.
int exponential_band_cutoff(const ModularPoint& tau, double max_abs_imag_shift);

}  // namespace mwp
