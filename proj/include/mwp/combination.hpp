#pragma once

#include <map>
#include <string>

#include "mwp/index.hpp"
#include "mwp/rational.hpp"

namespace mwp {

// Exact Q-linear combination of formal index symbols.  Zero coefficients are
// never stored.
class Combination {
 public:
  using Terms = std::map<Index, Rational>;

  Combination() = default;
  explicit Combination(const Index& idx, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Index& idx) const;

  void add(const Index& idx, const Rational& c);
  Combination& operator+=(const Combination& other);
  Combination& operator-=(const Combination& other);
  Combination& operator*=(const Rational& c);
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(Combination a, const Rational& c) { return a *= c; }

  // Weight shared by all terms; -1 for the zero combination, throws when the
  // combination mixes weights.
  int weight() const;

  // Evaluate with a per-symbol value map.
  template <class F>
  auto evaluate(F&& value_of) const -> decltype(value_of(std::declval<const Index&>())) {
    using V = decltype(value_of(std::declval<const Index&>()));
    V acc{};
    for (const auto& [idx, c] : terms_) acc += value_of(idx) * c.get_d();
    return acc;
  }

  std::string str(const std::string& symbol = "G~") const;

  bool operator==(const Combination&) const = default;

 private:
  Terms terms_;
};

// Quasi-shuffle (harmonic) product of compositions with part addition as the
// merge:  (a,u) * (b,v) = (a, u*(b,v)) + (b, (a,u)*v) + (a+b, u*v).
Combination stuffle(const Index& a, const Index& b);

// Bilinear extension.
Combination stuffle(const Combination& a, const Combination& b);

}  // namespace mwp
