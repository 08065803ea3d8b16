#pragma once

#include <stdexcept>

namespace mwp {

inline Rational scale(const Rational& x, const Rational& c) { return x * c; }
inline Complex scale(const Complex& x, const Rational& c) { return x * c.get_d(); }

template <class T>
T partition_trace(TraceWeight phi, const std::vector<T>& x, int r) {
  if (r < 0) throw std::invalid_argument("partition_trace: negative order");
  if (static_cast<int>(x.size()) < r)
    throw std::invalid_argument("partition_trace: too few variables");
  T total = T(0);
  for (const Partition& lambda : partitions(r)) {
    T term = T(1);
    for (const auto& [part, m] : lambda.multiplicities())
      for (int i = 0; i < m; ++i) term = term * x[part - 1];
    total = total + scale(term, trace_weight(phi, lambda));
  }
  return total;
}

}  // namespace mwp
