#include "mwp/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwp {

std::string Symbol::str() const {
  switch (kind) {
    case Kind::G: return "G" + std::to_string(index[0]);
    case Kind::Gt: return "G~(" + index.str() + ")";
    case Kind::P: return "wp";
    case Kind::Pd: return "wp'";
    case Kind::Wp: return "wp(" + index.str() + ")";
  }
  return "?";
}

int weight(const Monomial& m) {
  int w = 0;
  for (const Symbol& s : m) w += s.weight();
  return w;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += "*";
    out += m[i].str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

SymPoly::SymPoly(const Rational& c) { add({}, c); }

SymPoly::SymPoly(const Symbol& s, const Rational& c) { add({s}, c); }

Rational SymPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add(const Monomial& m, const Rational& coeff) {
  Rational c = coeff;
  c.canonicalize();
  if (c == 0) return;
  Monomial key = m;
  std::sort(key.begin(), key.end());
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) {
  SymPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(m, ca * cb);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SymPoly SymPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  SymPoly out(1);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

SymPoly SymPoly::substitute(const std::function<SymPoly(const Symbol&)>& f) const {
  SymPoly out;
  for (const auto& [mono, c] : terms_) {
    SymPoly term(c);
    for (const Symbol& s : mono) term *= f(s);
    out += term;
  }
  return out;
}

SymPoly SymPoly::as_full_eisenstein() const {
  return substitute([](const Symbol& s) -> SymPoly {
    if (s.kind == Symbol::Kind::G) return s.index[0] % 2 ? SymPoly() : SymPoly(s);
    if (s.kind != Symbol::Kind::Gt) return SymPoly(s);
    if (s.index.depth() == 1 && s.index[0] % 2 == 0) return SymPoly::G(s.index[0]) * Rational(1, 2);
    return SymPoly(s);
  });
}

SymPoly SymPoly::as_multiple_eisenstein() const {
  return substitute([](const Symbol& s) -> SymPoly {
    if (s.kind != Symbol::Kind::G) return SymPoly(s);
    if (s.index[0] % 2) return SymPoly();
    return SymPoly::Gt(s.index) * Rational(2);
  });
}

SymPoly SymPoly::reduce_to_g4_g6() const {
  // c_n = (2n-1) G_{2n} expressed in G_4, G_6
  std::map<int, SymPoly> c;
  c[2] = SymPoly::G(4) * Rational(3);
  c[3] = SymPoly::G(6) * Rational(5);
  auto c_of = [&c](auto&& self, int n) -> const SymPoly& {
    auto it = c.find(n);
    if (it != c.end()) return it->second;
    SymPoly acc;
    for (int k = 2; k <= n - 2; ++k) acc += self(self, k) * self(self, n - k);
    Rational w(3, (n - 3) * (2 * n + 1));
    w.canonicalize();
    acc *= w;
    return c.emplace(n, std::move(acc)).first->second;
  };
  return substitute([&](const Symbol& s) -> SymPoly {
    if (s.kind != Symbol::Kind::G) return SymPoly(s);
    const int w = s.index[0];
    if (w % 2) return SymPoly();
    if (w <= 6) return SymPoly(s);
    const int n = w / 2;
    return c_of(c_of, n) * Rational(1, 2 * n - 1);
  });
}

Combination SymPoly::linearize() const {
  Combination out;
  for (const auto& [mono, c] : as_multiple_eisenstein().terms_) {
    Combination prod{Index()};
    for (const Symbol& s : mono) {
      if (s.kind != Symbol::Kind::Gt) throw std::logic_error("linearize: non-Eisenstein symbol " + s.str());
      prod = stuffle(prod, Combination(s.index));
    }
    prod *= c;
    out += prod;
  }
  return out;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += to_string(mono);
  }
  return out;
}

}  // namespace mwp
