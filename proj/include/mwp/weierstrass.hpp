#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "mwp/config.hpp"
#include "mwp/symbolic.hpp"

namespace mwp {

// ---------------------------------------------------------------------------
// Numerical depth-one functions.  All functions of z use the modified
// normalization in which sigma'/sigma = 1/z - sum_{n>=0} G_{n+2} z^{n+1}.
// ---------------------------------------------------------------------------

// zeta(k) for even k >= 2 from the Bernoulli numbers.
double zeta_even_value(int k);

// Eisenstein-ordered G_k(tau):
//   2 zeta(k) + 2 (-2 pi i)^k/(k-1)! sum_{n>=1} sigma_{k-1}(n) q^n   (even k),
//   0                                                             (odd k >= 3).
// k = 2 uses the same conditionally convergent ordering.
Complex eisenstein_G(int k, const ModularPoint& tau, const EvalConfig& cfg = {});

// Slow oracle: iterated truncated lattice sum, inner n-limit first.
Estimate eisenstein_G_direct(int k, const ModularPoint& tau, const EvalConfig& cfg = {});

// G_0..G_max (index = weight; G_0 = -1, G_1 = 0 by convention).  Cached per tau.
std::vector<Complex> eisenstein_table(const ModularPoint& tau, int max_weight);

enum class SigmaForm { Auto, Series, Product };

// sigma(z; tau).  Series: z exp(-sum G_{n+2} z^{n+2}/(n+2)), only for
// |z| < 0.8 * shortest lattice vector.  Product:
//   sin(pi z)/pi * prod_{m>=1} (1 - sin^2(pi z)/sin^2(pi m tau)).
Complex sigma(Complex z, const ModularPoint& tau, const EvalConfig& cfg = {},
              SigmaForm form = SigmaForm::Auto);

// Weierstrass zeta = sigma'/sigma, from the symmetric cotangent sum.
Complex weier_zeta(Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});
// Same from the Laurent series (|z| < 0.8 * shortest lattice vector).
Complex weier_zeta_series(Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});

struct QuasiPeriods {
  Complex eta_1;    // zeta(z+1) - zeta(z)
  Complex eta_tau;  // zeta(z+tau) - zeta(z)
};
QuasiPeriods quasi_periods(const ModularPoint& tau, const EvalConfig& cfg = {},
                           Complex base = Complex(0.31, 0.17));

// wp_2 = wp + G_2, and wp_k = (-1)^k/(k-1)! wp^{(k-2)} for k >= 3, evaluated as
// sum_m Psi_k(z + m tau).
Complex wp_k(int k, Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});
Complex wp(Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});
Complex wp_prime(Complex z, const ModularPoint& tau, const EvalConfig& cfg = {});

// Cauchy-integral Laurent coefficients c_lo..c_hi of f around center on a
// circle of the given radius.  nodes = 0 selects 4 * (hi - lo + 8).
std::vector<Complex> laurent_coefficients(const std::function<Complex(Complex)>& f, Complex center,
                                          double radius, int lo, int hi, int nodes = 0);
// 0.25 * shortest lattice vector.
double laurent_radius(const ModularPoint& tau);

// ---------------------------------------------------------------------------
// Symbolic layer.
// ---------------------------------------------------------------------------

// sum c_{s,t} wp^s (wp')^t, t in {0,1}, coefficients polynomials in the
// G_n symbols.  Products reduce (wp')^2 = 4 wp^3 - 60 G_4 wp - 140 G_6.
class WpPolynomial {
 public:
  using Key = std::pair<int, int>;  // (s, t)

  WpPolynomial() = default;
  static WpPolynomial wp_power(int s, const SymPoly& c = SymPoly(1));
  static WpPolynomial wp_prime_times_power(int s, const SymPoly& c = SymPoly(1));
  static WpPolynomial constant(const SymPoly& c);

  const std::map<Key, SymPoly>& terms() const { return terms_; }
  SymPoly coefficient(int s, int t) const;
  int degree_in_wp(int t = 0) const;
  bool is_zero() const { return terms_.empty(); }

  void add(int s, int t, const SymPoly& c);
  WpPolynomial& operator+=(const WpPolynomial& o);
  WpPolynomial& operator-=(const WpPolynomial& o);
  friend WpPolynomial operator+(WpPolynomial a, const WpPolynomial& b) { return a += b; }
  friend WpPolynomial operator-(WpPolynomial a, const WpPolynomial& b) { return a -= b; }
  friend WpPolynomial operator*(const WpPolynomial& a, const WpPolynomial& b);
  friend WpPolynomial operator*(WpPolynomial a, const SymPoly& c);
  bool operator==(const WpPolynomial&) const = default;

  // d/dz using wp' and wp'' = 6 wp^2 - 30 G_4.
  WpPolynomial derivative() const;
  WpPolynomial map_coefficients(const std::function<SymPoly(const SymPoly&)>& f) const;
  WpPolynomial reduce_to_g4_g6() const;
  SymPoly to_sympoly() const;

  Complex evaluate(Complex wp_value, Complex wp_prime_value,
                   const std::function<Complex(const Symbol&)>& symbol_value) const;
  Complex evaluate(Complex z, const ModularPoint& tau, const EvalConfig& cfg = {}) const;

  std::string str() const;

 private:
  std::map<Key, SymPoly> terms_;
};

// Numeric value of a G-symbol polynomial at tau (G~ symbols are rejected).
Complex evaluate_g_symbols(const SymPoly& p, const ModularPoint& tau);

// wp_2^{(2k-2)} as a polynomial in wp, built by the even-derivative recursion
// alpha_{k+1} from alpha_k.  k >= 1.
WpPolynomial wp_deriv_poly(int k);

// wp_2^{(n)} for any n >= 0 by repeated symbolic differentiation.
WpPolynomial wp2_derivative(int n);

// Two partition-trace expressions for wp_2^{(2k-2)}:
//   in_multiple_wp:  k (2k-1)! Tr_k(phi_log; wp_2, -wp_{2,2}, ..., (-1)^{k+1} wp_{{2}^k})
//   in_eisenstein:   (2k-1)! (G_{2k} + k Tr_k(phi_log; wp, -3G_4, ..., -(2k-1)G_{2k}))
// The first uses Symbol::Wp values, the second Symbol::P and G symbols.
struct TraceForms {
  SymPoly in_multiple_wp;
  SymPoly in_eisenstein;
};
TraceForms wp_deriv_trace_form(int k);

// Repeated-index coefficients for wp_{{2}^r} = f_r wp + ghat_r = f_r wp_2 + g_r.
SymPoly repeated_f(int r);
SymPoly repeated_g(int r);
SymPoly repeated_ghat(int r);
// Leading coefficient lim_{z->0} wp_{{h}^r}/wp_h.
SymPoly repeated_leading(int h, int r);

// wp_{{h}^r} as a polynomial in wp, wp'.  h = 2 and (h = 3, odd r) use the
// closed forms; other cases go through the generating-function expansion
//   wp_{{h}^r} = (-1)^r sum_{lambda |- r} prod_k 1/m_k! ((-1)^{hk-1} h/(hk)! wp_2^{(hk-2)})^{m_k}.
WpPolynomial repeated_index_closed_form(int h, int r);
WpPolynomial repeated_index_via_derivatives(int h, int r);

}  // namespace mwp
