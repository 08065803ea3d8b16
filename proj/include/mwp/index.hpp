#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mwp/rational.hpp"

namespace mwp {

// A composition (k_1, ..., k_r) of positive integers.  The empty index has
// weight 0 and acts as the unit of the stuffle product.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<int> parts);
  explicit Index(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t depth() const { return parts_.size(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  // Every part >= 2: the condition for lattice sums to converge.
  bool admissible_for_lattice() const;
  // Last part >= 2: the condition for the MZV series to converge.
  bool admissible_for_mzv() const;

  Index reversed() const;
  Index slice(std::size_t begin, std::size_t end) const;
  Index concat(const Index& other) const;

  // "2,3,2" (the empty index is "").
  std::string str() const;
  static Index parse(std::string_view text);

  auto operator<=>(const Index&) const = default;
  bool operator==(const Index&) const = default;

 private:
  std::vector<int> parts_;
};

// All compositions of k into parts >= min_part, lexicographic in the parts.
std::vector<Index> compositions(int k, int min_part = 1);
inline std::vector<Index> compositions_ge2(int k) { return compositions(k, 2); }

// Integer partition stored by multiplicities m_k.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::map<int, int> multiplicities);

  const std::map<int, int>& multiplicities() const { return mult_; }
  int multiplicity(int part) const;
  int size() const;
  int length() const;
  // Parts in non-increasing order.
  std::vector<int> parts() const;
  std::string str() const;

  bool operator==(const Partition&) const = default;

 private:
  std::map<int, int> mult_;
};

// Partitions of r in reverse lexicographic order of their non-increasing
// part sequences: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions(int r);

// Weights on partitions used by partition traces.
enum class TraceWeight { Beta, BetaPrime, PhiLog };

Rational trace_weight(TraceWeight phi, const Partition& lambda);

// Tr_r(phi; X_1..X_r) = sum_{lambda |- r} phi(lambda) prod X_j^{m_j}.
// T must be a commutative ring with T(1) and multiplication by Rational
// through scale(T, Rational).
template <class T>
T partition_trace(TraceWeight phi, const std::vector<T>& x, int r);

}  // namespace mwp

#include "mwp/detail/partition_trace.ipp"
