#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mwp/config.hpp"
#include "mwp/index.hpp"
#include "mwp/rational.hpp"

namespace mwp {

// ---------------------------------------------------------------------------
// Monotangents and multitangents
//   Psi_{k_1..k_r}(z) = sum_{n_1 < ... < n_r in Z} prod (z + n_j)^{-k_j}.
// ---------------------------------------------------------------------------

// q-form for Im z > 0 (Lipschitz, at most q_order terms), reflection for
// Im z < 0, cot-polynomial closed form for real z.
Estimate monotangent(int k, Complex z, int q_order = 64);

// Symmetric partial sums |n| < N, 2N, ... with Richardson extrapolation.
Estimate monotangent_direct(int k, Complex z, long N = 2000);

// Psi_a = sum_n coefficient_n Psi_n, each coefficient a rational combination
// of products zeta(A) zeta(B).
struct MultitangentReduction {
  using ZetaPair = std::pair<Index, Index>;
  Index index;
  std::map<int, std::map<ZetaPair, Rational>> terms;

  double coefficient_value(int n) const;
  Complex evaluate(Complex z, int q_order = 64) const;
  std::string str() const;
};

// Requires a_1, a_r >= 2.
MultitangentReduction multitangent_reduce(const Index& a);

// Nested sums over n in (-N, N), extrapolated in N.
Estimate multitangent_direct(const Index& a, Complex z, long N = 1000);

// ---------------------------------------------------------------------------
// Word decomposition of ordered lattice chains by shared tau-coefficient.
// ---------------------------------------------------------------------------

// A word in {x, y} of length r-1: letter j joins parts j, j+1 into one block
// (x) or starts a new block (y).
struct WordDecomposition {
  std::string word;
  std::vector<Index> blocks;
  std::vector<std::size_t> starts;  // first part of each block (0-based)
};

std::vector<WordDecomposition> word_decompositions(const Index& index);

// Truncated contribution of one word to the chain sum
//   sum_{w_1 < ... < w_r} prod_j (shift_j + w_j)^{-k_j},  |m| < M, |n| < N,
// over chains grouped as the word prescribes (equal m inside a block,
// strictly increasing m across blocks).  Summing over all words gives the
// full truncated chain sum.
Complex word_contribution(const Index& index, const WordDecomposition& w, const std::vector<Complex>& shifts,
                          const ModularPoint& tau, int M, int N);

// ---------------------------------------------------------------------------
// Multiple Eisenstein series
//   G~_{k_1..k_r}(tau) = sum_{0 < w_1 < ... < w_r} w_1^{-k_1} ... w_r^{-k_r}.
// ---------------------------------------------------------------------------

// Iterated lattice sum (inner limit first).  Parts >= 2.
Estimate meis_direct(const Index& index, const ModularPoint& tau, const EvalConfig& cfg = {});

// q-expansion: sum_t zeta(k_1..k_t) * sum over block splittings of the rest of
// ordered m-sums of reduced multitangents.  Throws std::runtime_error when
// cfg.q_order cannot reach cfg.tolerance.
Estimate meis_qexp(const Index& index, const ModularPoint& tau, const EvalConfig& cfg = {});

// g_{k_1..k_r}(z) = sum_{0 < m_1 < ... < m_r} prod Psi_{k_j}(z + m_j tau),
// for 0 < Im z < Im tau.  The empty index gives 1.
Estimate g_function(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});
// g_{k_1..k_r}(-z) for z in the same strip.
Estimate g_function_reflected(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});
// Same sum with every Psi from direct symmetric n-sums.
Estimate g_function_direct(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});

}  // namespace mwp
