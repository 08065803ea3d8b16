#include "mwp/combination.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace mwp {

Combination::Combination(const Index& idx, const Rational& c) { add(idx, c); }

Rational Combination::coefficient(const Index& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Combination::add(const Index& idx, const Rational& coeff) {
  Rational c = coeff;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Combination& Combination::operator+=(const Combination& other) {
  for (const auto& [idx, c] : other.terms_) add(idx, c);
  return *this;
}

Combination& Combination::operator-=(const Combination& other) {
  for (const auto& [idx, c] : other.terms_) add(idx, -c);
  return *this;
}

Combination& Combination::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  return *this;
}

int Combination::weight() const {
  if (terms_.empty()) return -1;
  const int w = terms_.begin()->first.weight();
  for (const auto& [idx, c] : terms_)
    if (idx.weight() != w) throw std::logic_error("combination is not weight-homogeneous");
  return w;
}

std::string Combination::str(const std::string& symbol) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (a != 1) out += a.get_str() + "*";
    out += symbol + "(" + idx.str() + ")";
  }
  return out;
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

const Combination& stuffle_cached(const std::vector<int>& a, const std::vector<int>& b);

Combination stuffle_raw(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty()) return Combination(Index(b));
  if (b.empty()) return Combination(Index(a));
  const std::vector<int> a_tail(a.begin() + 1, a.end());
  const std::vector<int> b_tail(b.begin() + 1, b.end());
  Combination out;
  auto prepend = [&out](int head, const Combination& c) {
    for (const auto& [idx, coef] : c.terms()) {
      std::vector<int> parts{head};
      parts.insert(parts.end(), idx.parts().begin(), idx.parts().end());
      out.add(Index(std::move(parts)), coef);
    }
  };
  prepend(a.front(), stuffle_cached(a_tail, b));
  prepend(b.front(), stuffle_cached(a, b_tail));
  prepend(a.front() + b.front(), stuffle_cached(a_tail, b_tail));
  return out;
}

// Memoized by (a, b); entries are never mutated after insertion and std::map
// nodes are address-stable, so returned references stay valid.
const Combination& stuffle_cached(const std::vector<int>& a, const std::vector<int>& b) {
  static std::recursive_mutex mu;
  static std::map<Key, Combination> memo;
  std::lock_guard<std::recursive_mutex> lock(mu);
  Key key{a, b};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Combination value = stuffle_raw(a, b);
  return memo.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

Combination stuffle(const Index& a, const Index& b) { return stuffle_cached(a.parts(), b.parts()); }

Combination stuffle(const Combination& a, const Combination& b) {
  Combination out;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      Combination p = stuffle(ia, ib);
      p *= ca * cb;
      out += p;
    }
  return out;
}

}  // namespace mwp
