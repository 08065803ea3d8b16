#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwp/index.hpp"
#include "mwp/rational.hpp"

namespace mwp {

inline Rational invert(const Rational& x) {
  if (x == 0) throw std::domain_error("division by zero");
  return 1 / x;
}
inline Complex invert(const Complex& x) { return 1.0 / x; }

enum class Variable { Y, q, alpha, z, X };

inline const char* variable_name(Variable v) {
  switch (v) {
    case Variable::Y: return "Y";
    case Variable::q: return "q";
    case Variable::alpha: return "alpha";
    case Variable::z: return "z";
    case Variable::X: return "X";
  }
  return "?";
}

// c_0 + c_1 v + ... + c_T v^T  (mod v^{T+1}).
//
// T is any commutative ring type with T(0), T(1), +, -, * and a
// scale(T, Rational) overload.  inverse() additionally needs
// invert(T) for the constant term.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries(Variable var, int order) : var_(var), coeffs_(checked(order) + 1, T(0)) {}
  TruncatedSeries(Variable var, int order, std::vector<T> coeffs)
      : var_(var), coeffs_(std::move(coeffs)) {
    checked(order);
    coeffs_.resize(order + 1, T(0));
  }

  static TruncatedSeries constant(Variable var, int order, const T& c) {
    TruncatedSeries s(var, order);
    s.coeffs_[0] = c;
    return s;
  }
  static TruncatedSeries monomial(Variable var, int order, int power, const T& c) {
    TruncatedSeries s(var, order);
    if (power >= 0 && power <= order) s.coeffs_[power] = c;
    return s;
  }

  Variable variable() const { return var_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  const T& operator[](int n) const { return coeffs_.at(n); }
  T& operator[](int n) { return coeffs_.at(n); }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries out(var_, std::min(order, this->order()));
    std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out = a.aligned(b);
    for (int n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return out;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out = a.aligned(b);
    for (int n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return out;
  }
  // Cauchy product truncated to the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out = a.aligned(b);
    for (int i = 0; i <= out.order(); ++i)
      for (int j = 0; i + j <= out.order(); ++j)
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return out;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const T& c) {
    TruncatedSeries out = a;
    for (auto& x : out.coeffs_) x = x * c;
    return out;
  }
  TruncatedSeries scaled(const Rational& c) const {
    TruncatedSeries out = *this;
    for (auto& x : out.coeffs_) x = scale(x, c);
    return out;
  }

  // exp(f) for f with zero constant term:  n c_n = sum_{k=1}^n k f_k c_{n-k}.
  TruncatedSeries exp() const {
    if (!(coeffs_[0] == T(0))) throw std::domain_error("series exp requires zero constant term");
    TruncatedSeries out(var_, order());
    out.coeffs_[0] = T(1);
    for (int n = 1; n <= order(); ++n) {
      T acc(0);
      for (int k = 1; k <= n; ++k) acc = acc + scale(coeffs_[k], Rational(k)) * out.coeffs_[n - k];
      out.coeffs_[n] = scale(acc, Rational(1, n));
    }
    return out;
  }

  // log(f) for f with constant term 1:  n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}.
  TruncatedSeries log() const {
    if (!(coeffs_[0] == T(1))) throw std::domain_error("series log requires constant term 1");
    TruncatedSeries out(var_, order());
    for (int n = 1; n <= order(); ++n) {
      T acc = scale(coeffs_[n], Rational(n));
      for (int k = 1; k < n; ++k) acc = acc - scale(out.coeffs_[k], Rational(k)) * coeffs_[n - k];
      out.coeffs_[n] = scale(acc, Rational(1, n));
    }
    return out;
  }

  // 1/f; needs invert(c_0).
  TruncatedSeries inverse() const {
    TruncatedSeries out(var_, order());
    const T inv0 = invert(coeffs_[0]);
    out.coeffs_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
      T acc(0);
      for (int k = 1; k <= n; ++k) acc = acc + coeffs_[k] * out.coeffs_[n - k];
      out.coeffs_[n] = T(0) - acc * inv0;
    }
    return out;
  }

 private:
  static int checked(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return order;
  }
  TruncatedSeries aligned(const TruncatedSeries& b) const {
    if (var_ != b.var_)
      throw std::invalid_argument(std::string("series variable mismatch: ") + variable_name(var_) +
                                  " vs " + variable_name(b.var_));
    return TruncatedSeries(var_, std::min(order(), b.order()));
  }

  Variable var_;
  std::vector<T> coeffs_;
};

}  // namespace mwp
