#include "mwp/relations.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "mwp/multiwp.hpp"
#include "mwp/mzv.hpp"
#include "mwp/series.hpp"
#include "mwp/weierstrass.hpp"

namespace mwp {

namespace {

int sign_of(int e) { return e % 2 ? -1 : 1; }

// calls f(n) for every n with n_j >= lower_j (j != fixed), n_fixed given,
// and total sum
void for_each_composition(const std::vector<int>& lower, int fixed, int fixed_value, int total,
                          const std::function<void(const std::vector<int>&)>& f) {
  const std::size_t r = lower.size();
  std::vector<int> n(r);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j == r) {
      if (left == 0) f(n);
      return;
    }
    if (static_cast<int>(j) == fixed) {
      n[j] = fixed_value;
      if (left >= fixed_value) rec(j + 1, left - fixed_value);
      return;
    }
    for (int v = lower[j]; v <= left; ++v) {
      n[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, total);
}

Index reversed_prefix(const std::vector<int>& n, std::size_t end) {
  std::vector<int> out(n.begin(), n.begin() + static_cast<long>(end));
  std::reverse(out.begin(), out.end());
  return Index(out);
}

Index suffix(const std::vector<int>& n, std::size_t begin) {
  return Index(std::vector<int>(n.begin() + static_cast<long>(begin), n.end()));
}

Integer binomial_product(const std::vector<int>& n, const Index& k, int skip) {
  Integer c = 1;
  for (std::size_t j = 0; j < n.size(); ++j)
    if (static_cast<int>(j) != skip) c *= binomial(n[j] - 1, k[j] - 1);
  return c;
}

}  // namespace

Combination antipode_relation(const Index& source) {
  if (!source.admissible_for_lattice()) throw std::invalid_argument("antipode_relation: parts must be >= 2");
  Combination out;
  const std::size_t r = source.depth();
  for (std::size_t i = 0; i < r; ++i) {
    for_each_composition(source.parts(), static_cast<int>(i), 1, source.weight(), [&](const std::vector<int>& n) {
      const Integer c = binomial_product(n, source, static_cast<int>(i));
      if (c == 0) return;
      int tail = 0;
      for (std::size_t j = i; j < r; ++j) tail += n[j];
      const Rational coeff(c * sign_of(source[i] + tail));
      out += stuffle(reversed_prefix(n, i), suffix(n, i + 1)) * coeff;
    });
  }
  return out;
}

RelationMatrix::RelationMatrix(int weight) : weight_(weight), columns_(compositions_ge2(weight)) {
  for (std::size_t j = 0; j < columns_.size(); ++j) column_of_[columns_[j]] = j;
}

std::vector<Rational> RelationMatrix::dense(const Combination& row) const {
  std::vector<Rational> v(columns_.size(), Rational(0));
  for (const auto& [idx, c] : row.terms()) {
    auto it = column_of_.find(idx);
    if (it == column_of_.end()) throw std::invalid_argument("RelationMatrix: symbol " + idx.str() + " outside the basis");
    v[it->second] = c;
  }
  return v;
}

void RelationMatrix::reduce(std::vector<Rational>& v) const {
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    const std::size_t p = pivots_[b];
    if (v[p] == 0) continue;
    const Rational f = v[p];
    const auto& row = rows_[b];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
}

bool RelationMatrix::add(const Combination& row) {
  std::vector<Rational> v = dense(row);
  reduce(v);
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  const Rational inv = 1 / v[p];
  for (auto& x : v)
    if (x != 0) x *= inv;
  for (auto& other : rows_) {
    if (other[p] == 0) continue;
    const Rational f = other[p];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) other[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RelationMatrix::contains(const Combination& row) const {
  std::vector<Rational> v = dense(row);
  reduce(v);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<Combination> RelationMatrix::basis() const {
  std::vector<Combination> out;
  for (const auto& row : rows_) {
    Combination c;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) c.add(columns_[j], row[j]);
    out.push_back(std::move(c));
  }
  return out;
}

RelationMatrix antipode_span(int weight) {
  static std::mutex mu;
  static std::map<int, RelationMatrix> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(weight);
    if (it != cache.end()) return it->second;
  }
  RelationMatrix m(weight);
  if (weight >= 2)
    for (const Index& source : compositions_ge2(weight + 1)) {
      const Combination a = antipode_relation(source);
      if (!a.is_zero()) m.add(a);
    }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(weight, std::move(m)).first->second;
}

RelationMatrix relation_span(int weight) {
  if (weight < 2) throw std::invalid_argument("relation_span: weight must be >= 2");
  RelationMatrix m(weight);
  for (int v = 2; v <= weight; ++v) {
    const int uw = weight - v;
    if (uw == 1) continue;
    const std::vector<Combination> relations = antipode_span(v).basis();
    if (relations.empty()) continue;
    const std::vector<Index> multipliers = uw == 0 ? std::vector<Index>{Index{}} : compositions_ge2(uw);
    for (const Index& u : multipliers)
      for (const Combination& a : relations) m.add(u.empty() ? a : stuffle(Combination(u), a));
  }
  return m;
}

int relation_rank(int weight) { return static_cast<int>(relation_span(weight).rank()); }

int conjectured_dim(int weight) {
  if (weight < 0) throw std::invalid_argument("conjectured_dim: weight must be >= 0");
  std::vector<Rational> d(weight + 1, Rational(0));
  d[0] = 1;
  for (int p : {2, 3, 4, 5}) if (p <= weight) d[p] -= 1;
  for (int p = 8; p <= 12 && p <= weight; ++p) d[p] += 1;
  const TruncatedSeries<Rational> den(Variable::X, weight, d);
  return static_cast<int>(den.inverse()[weight].get_d());
}

int conjectured_rel(int weight) {
  return static_cast<int>(compositions_ge2(weight).size()) - conjectured_dim(weight);
}

std::vector<RelationTableRow> relation_table(int min_weight, int max_weight) {
  std::vector<RelationTableRow> out;
  for (int w = min_weight; w <= max_weight; ++w) {
    RelationTableRow row{w, conjectured_dim(w), conjectured_rel(w), relation_rank(w), 0};
    row.deficit = row.rel_conj - row.rel_anti;
    out.push_back(row);
  }
  return out;
}

std::string relation_table_csv(const std::vector<RelationTableRow>& rows) {
  std::ostringstream os;
  os << "weight,dim_conj,rel_conj,rel_anti,deficit\n";
  for (const auto& r : rows)
    os << r.weight << "," << r.dim_conj << "," << r.rel_conj << "," << r.rel_anti << "," << r.deficit << "\n";
  return os.str();
}

namespace {

// Machin's formula
BigFloat pi_to(mp_bitcnt_t bits) {
  auto arctan_inv = [bits](long x) {
    BigFloat sum(0, bits), term(1, bits), eps(1, bits);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits + 8);
    term /= x;
    const long x2 = x * x;
    for (long n = 0; abs(term) > eps; ++n) {
      BigFloat t = term / (2 * n + 1);
      sum += n % 2 ? -t : t;
      term /= x2;
    }
    return sum;
  };
  BigFloat pi = 16 * arctan_inv(5) - 4 * arctan_inv(239);
  return pi;
}

}  // namespace

double mzv_relation_residual(const Index& index, int precision) {
  if (!index.admissible_for_lattice()) throw std::invalid_argument("mzv_relation_residual: parts must be >= 2");
  const int digits = std::max(precision, 15);
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(std::ceil(digits * std::log2(10.0))) + 64;
  std::map<Index, BigFloat> memo;
  auto z = [&](const Index& idx) -> BigFloat {
    if (idx.empty()) return BigFloat(1, bits);
    auto it = memo.find(idx);
    if (it == memo.end()) it = memo.emplace(idx, BigFloat(mzv(idx, digits).value, bits)).first;
    return it->second;
  };
  const std::size_t r = index.depth();
  const int k = index.weight();
  BigFloat lhs(0, bits);
  for (std::size_t i = 0; i <= r; ++i) {
    int tail = 0;
    for (std::size_t j = i; j < r; ++j) tail += index[j];
    const BigFloat t = z(reversed_prefix(index.parts(), i)) * z(index.slice(i, r));
    lhs += sign_of(tail) < 0 ? BigFloat(-t) : t;
  }
  const BigFloat two_pi = 2 * pi_to(bits);
  BigFloat rhs(0, bits);
  for (std::size_t i = 0; i < r; ++i)
    for (int ni = 0; ni <= k; ni += 2)
      for_each_composition(index.parts(), static_cast<int>(i), ni, k, [&](const std::vector<int>& n) {
        const Integer c = binomial_product(n, index, static_cast<int>(i));
        if (c == 0) return;
        int tail = 0;
        for (std::size_t j = i + 1; j < r; ++j) tail += n[j];
        // (2 pi i)^n B_n / n! = (-1)^{n/2} (2 pi)^n B_n / n!
        Rational q = c * bernoulli(ni) / factorial(ni);
        q *= sign_of(index[i] + tail + ni / 2);
        BigFloat power(1, bits);
        for (int e = 0; e < ni; ++e) power *= two_pi;
        rhs -= BigFloat(q, bits) * power * z(reversed_prefix(n, i)) * z(suffix(n, i + 1));
      });
  return std::abs(BigFloat(lhs - rhs).get_d());
}

Complex evaluate_relation(const Combination& relation, const ModularPoint& tau, const EvalConfig& cfg) {
  GtEvaluator gt(tau, cfg);
  return relation.evaluate([&](const Index& idx) { return gt.symbol(idx); });
}

double eisenstein_relation_residual(const Index& index, int m, const ModularPoint& tau, const EvalConfig& cfg) {
  if (m <= 0) throw std::invalid_argument("eisenstein_relation_residual: m must be positive");
  if (!index.admissible_for_lattice()) throw std::invalid_argument("eisenstein_relation_residual: parts must be >= 2");
  GtEvaluator gt(tau, cfg);
  const std::size_t r = index.depth();
  const int total = index.weight() + m;
  auto boundary = [&](const std::vector<int>& n, std::size_t left_end, std::size_t right_begin) {
    return gt.symbol(reversed_prefix(n, left_end)) * gt.symbol(suffix(n, right_begin));
  };
  auto tail_sum = [&](const std::vector<int>& n, std::size_t from) {
    int s = 0;
    for (std::size_t j = from; j < r; ++j) s += n[j];
    return s;
  };
  Complex lhs = 0.0;
  for (std::size_t i = 0; i < r; ++i)
    for (int ni = m + 1; ni <= total; ++ni) {
      if (ni % 2) continue;  // G_n vanishes for odd n
      const Complex g = eisenstein_G(ni, tau, cfg);
      for_each_composition(index.parts(), static_cast<int>(i), ni, total, [&](const std::vector<int>& n) {
        const Integer c = binomial(ni - 1, m) * binomial_product(n, index, static_cast<int>(i));
        if (c == 0) return;
        lhs += static_cast<double>(sign_of(index[i] + tail_sum(n, i + 1))) * c.get_d() * boundary(n, i, i + 1) * g;
      });
    }
  Complex rhs = 0.0;
  for (std::size_t i = 0; i <= r; ++i)
    for_each_composition(index.parts(), -1, 0, total, [&](const std::vector<int>& n) {
      const Integer c = binomial_product(n, index, -1);
      if (c == 0) return;
      rhs += static_cast<double>(sign_of(tail_sum(n, i))) * c.get_d() * boundary(n, i, i);
    });
  for (std::size_t i = 0; i < r; ++i)
    for_each_composition(index.parts(), static_cast<int>(i), 0, total, [&](const std::vector<int>& n) {
      const Integer c = binomial_product(n, index, static_cast<int>(i));
      if (c == 0) return;
      rhs += static_cast<double>(sign_of(index[i] + tail_sum(n, i + 1))) * c.get_d() * boundary(n, i, i + 1);
    });
  // both printed right-hand sums carry an extra (-1)^m against the z^m
  // coefficient of the left side
  return std::abs(lhs - static_cast<double>(sign_of(m)) * rhs);
}

}  // namespace mwp
