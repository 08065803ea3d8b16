#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mwp/combination.hpp"
#include "mwp/index.hpp"
#include "mwp/rational.hpp"

namespace mwp {

// A formal symbol: the full series G_n(tau), the ordered multiple series
// G~_{k_1..k_r}(tau), the Weierstrass function wp(z) or its derivative, or
// a multiple wp-value wp_{k_1..k_r}(z).
struct Symbol {
  enum class Kind { G, Gt, P, Pd, Wp };
  Kind kind = Kind::G;
  Index index;

  static Symbol G(int n) { return {Kind::G, Index{n}}; }
  static Symbol Gt(const Index& idx) { return {Kind::Gt, idx}; }
  static Symbol P() { return {Kind::P, Index{}}; }
  static Symbol Pd() { return {Kind::Pd, Index{}}; }
  static Symbol Wp(const Index& idx) { return {Kind::Wp, idx}; }

  // Modular weight; wp carries 2 and wp' carries 3.
  int weight() const {
    if (kind == Kind::P) return 2;
    if (kind == Kind::Pd) return 3;
    return index.weight();
  }
  std::string str() const;

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;
};

// Commutative monomial: sorted multiset of symbols.
using Monomial = std::vector<Symbol>;

int weight(const Monomial& m);
std::string to_string(const Monomial& m);

// Polynomial over Q in the symbols above.
class SymPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  SymPoly() = default;
  SymPoly(const Rational& c);  // NOLINT: constants convert implicitly
  SymPoly(int c) : SymPoly(Rational(c)) {}  // NOLINT
  explicit SymPoly(const Symbol& s, const Rational& c = 1);
  static SymPoly G(int n) { return SymPoly(Symbol::G(n)); }
  static SymPoly Gt(const Index& idx) { return SymPoly(Symbol::Gt(idx)); }
  static SymPoly P() { return SymPoly(Symbol::P()); }
  static SymPoly Pd() { return SymPoly(Symbol::Pd()); }
  static SymPoly Wp(const Index& idx) { return SymPoly(Symbol::Wp(idx)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient({}); }

  void add(const Monomial& m, const Rational& c);
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o);
  SymPoly& operator*=(const Rational& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator-(SymPoly a) { return a *= Rational(-1); }
  friend SymPoly operator*(SymPoly a, const SymPoly& b) { return a *= b; }
  friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
  friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
  friend SymPoly operator*(SymPoly a, int c) { return a *= Rational(c); }
  friend SymPoly operator*(int c, SymPoly a) { return a *= Rational(c); }
  SymPoly pow(int e) const;

  bool operator==(const SymPoly&) const = default;

  // Substitute every symbol by a polynomial.
  SymPoly substitute(const std::function<SymPoly(const Symbol&)>& f) const;

  // G~_(n) -> G_n / 2 for even n; odd-weight G_n -> 0.
  SymPoly as_full_eisenstein() const;
  // G_n -> 2 G~_(n) for even n, 0 for odd n.
  SymPoly as_multiple_eisenstein() const;
  // Rewrite G_{2n}, n >= 4, through G_4 and G_6 using the Weierstrass
  // recurrence (n-3)(2n+1) c_n = 3 sum_{k=2}^{n-2} c_k c_{n-k}, c_n = (2n-1) G_{2n}.
  SymPoly reduce_to_g4_g6() const;
  // Expand every product of G~ symbols by the stuffle product.  G symbols
  // are first rewritten as G~.  The empty monomial maps to the empty index.
  Combination linearize() const;

  template <class V, class F>
  V evaluate(F&& value_of) const {
    V total{};
    for (const auto& [mono, c] : terms_) {
      V term = V(c.get_d());
      for (const Symbol& s : mono) term *= value_of(s);
      total += term;
    }
    return total;
  }

  std::string str() const;

 private:
  Terms terms_;
};

inline SymPoly scale(const SymPoly& x, const Rational& c) { return x * c; }

}  // namespace mwp
