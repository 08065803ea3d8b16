#pragma once

#include <map>
#include <string>
#include <vector>

#include "mwp/config.hpp"
#include "mwp/index.hpp"
#include "mwp/rational.hpp"

namespace mwp {

// wp_{k_1..k_r}(z) = sum_{w_1 < ... < w_r} prod (z - w_j)^{-k_j}, parts >= 2.
Estimate multiwp_direct(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});

// Restricted sum over 0 < w_1 < ... < w_r of prod (x_j - w_j)^{-k_j}; the
// empty index gives 1.
Estimate multiwp_tilde(const Index& index, const std::vector<Complex>& x, const ModularPoint& tau,
                       const EvalConfig& cfg = {});

// Full-lattice sum with one argument per part.
Estimate multiwp_multivar(const Index& index, const std::vector<Complex>& z, const ModularPoint& tau,
                          const EvalConfig& cfg = {});

// Right side of the decomposition of multiwp_multivar into restricted sums:
// boundary products over i = 0..r plus the terms with w_i = 0.
Complex multiwp_multivar_decomposed(const Index& index, const std::vector<Complex>& z, const ModularPoint& tau,
                                    const EvalConfig& cfg = {});

// Product of G~ symbols, kept sorted; the empty monomial is 1.
using GtMonomial = std::vector<Index>;
using GtPolynomial = std::map<GtMonomial, Rational>;

GtMonomial gt_monomial(std::vector<Index> factors);
void gt_add(GtPolynomial& p, const GtMonomial& m, const Rational& c);
std::string gt_str(const GtPolynomial& p);

// Cached numerical values of G~ symbols at one tau.  Depth-one symbols of
// even weight come from G_k/2, the rest from the q-expansion with the
// direct sum as fallback.
class GtEvaluator {
 public:
  explicit GtEvaluator(const ModularPoint& tau, const EvalConfig& cfg = {});
  Complex symbol(const Index& index);
  Complex monomial(const GtMonomial& m);
  Complex polynomial(const GtPolynomial& p);
  const ModularPoint& tau() const { return tau_; }

 private:
  ModularPoint tau_;
  EvalConfig cfg_;
  std::map<Index, Complex> cache_;
};

// wp_{k_1..k_r}(z) = sum_n c_n wp_n(z) + c_0 with G~ polynomials c_n.
struct ReducedForm {
  Index index;
  std::map<int, GtPolynomial> wp_terms;
  GtPolynomial constant;

  Complex evaluate(Complex z, GtEvaluator& gt, const EvalConfig& cfg = {}) const;
  Complex evaluate(Complex z, const ModularPoint& tau, const EvalConfig& cfg = {}) const;
  // Form of the reversed index through wp_k(-z) = (-1)^k wp_{rev k}(z).
  ReducedForm reflected() const;
  std::string str() const;
};

ReducedForm multiwp_reduce(const Index& index);

// Q_{r,i}(z; x) = wp~_{2^{r-i}}(z - x_{i+1}, ..., z - x_r) wp~_{2^{i-1}}(x_{i-1} - z, ..., x_1 - z).
struct QFactor {
  int r;
  int i;  // 1-based

  Complex value(Complex z, const std::vector<Complex>& x, const ModularPoint& tau, const EvalConfig& cfg = {}) const;
  // d/dx_i of Q_{r,i}(x_i; x), x_i entering every argument.
  Complex x_derivative(const std::vector<Complex>& x, const ModularPoint& tau, const EvalConfig& cfg = {}) const;
};

// sum_i d/dx_i Q_{r,i}(x_i; x); vanishes identically.
Complex antipode_residual(int r, const std::vector<Complex>& x, const ModularPoint& tau, const EvalConfig& cfg = {});

// Coefficient c_{r,j} = rational * (2 pi i)^power of the g-function expansion.
struct FourierCoefficient {
  Rational rational;
  int two_pi_i_power;
  Complex value() const;
};
FourierCoefficient multiwp22_coefficient(int r, int j);

// wp_{2^r}(z) through g-functions, 0 < Im z < Im tau.
Complex multiwp22_fourier(int r, Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});

// wp~_k(-z) through Hurwitz MZVs, reduced multitangents and g-functions,
// 0 < Im z < Im tau.
Complex multiwp_tilde_fourier(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});

struct SL2Z {
  long a, b, c, d;
};

// |LHS - RHS| of the transformation law of wp_{2^r} under gamma.
double modular_transform_check(int r, const SL2Z& gamma, Complex z, const ModularPoint& tau,
                               const EvalConfig& cfg = {});

}  // namespace mwp
