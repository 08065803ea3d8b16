#include "mwp/index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace mwp {

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int k : parts_)
    if (k < 1) throw std::invalid_argument("Index parts must be positive");
}

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Index::admissible_for_lattice() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int k) { return k >= 2; });
}

bool Index::admissible_for_mzv() const { return parts_.empty() || parts_.back() >= 2; }

Index Index::reversed() const { return Index(std::vector<int>(parts_.rbegin(), parts_.rend())); }

Index Index::slice(std::size_t begin, std::size_t end) const {
  return Index(std::vector<int>(parts_.begin() + begin, parts_.begin() + end));
}

Index Index::concat(const Index& other) const {
  std::vector<int> out = parts_;
  out.insert(out.end(), other.parts_.begin(), other.parts_.end());
  return Index(std::move(out));
}

std::string Index::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Index Index::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Index();
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = trim(text.substr(pos, next - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 1)
      throw std::invalid_argument("malformed index: '" + std::string(text) + "'");
    parts.push_back(value);
    pos = next + 1;
  }
  return Index(std::move(parts));
}

std::vector<Index> compositions(int k, int min_part) {
  if (k < 0) return {};
  std::vector<Index> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int f = min_part; f <= left; ++f) {
      cur.push_back(f);
      self(self, left - f);
      cur.pop_back();
    }
  };
  rec(rec, k);
  return out;
}

Partition::Partition(std::map<int, int> multiplicities) : mult_(std::move(multiplicities)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    if (it->first < 1 || it->second < 0) throw std::invalid_argument("invalid partition");
    it = it->second == 0 ? mult_.erase(it) : std::next(it);
  }
}

int Partition::multiplicity(int part) const {
  auto it = mult_.find(part);
  return it == mult_.end() ? 0 : it->second;
}

int Partition::size() const {
  int s = 0;
  for (const auto& [k, m] : mult_) s += k * m;
  return s;
}

int Partition::length() const {
  int s = 0;
  for (const auto& [k, m] : mult_) s += m;
  return s;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) out.insert(out.end(), it->second, it->first);
  return out;
}

std::string Partition::str() const {
  std::string out = "(";
  auto p = parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions(int r) {
  if (r < 0) return {};
  std::vector<Partition> out;
  std::map<int, int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      ++cur[p];
      self(self, left - p, p);
      if (--cur[p] == 0) cur.erase(p);
    }
  };
  rec(rec, r, r);
  return out;
}

Rational trace_weight(TraceWeight phi, const Partition& lambda) {
  Rational beta = 1;
  for (const auto& [k, m] : lambda.multiplicities()) {
    Integer km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    beta /= Rational(factorial(m) * km);
  }
  switch (phi) {
    case TraceWeight::Beta:
      return beta;
    case TraceWeight::BetaPrime: {
      Integer two_l;
      mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(lambda.length()));
      return beta / Rational(two_l);
    }
    case TraceWeight::PhiLog: {
      if (lambda.length() == 0) return 0;
      Rational out(factorial(lambda.length() - 1));
      for (const auto& [k, m] : lambda.multiplicities()) out /= Rational(factorial(m));
      return out;
    }
  }
  return 0;
}

}  // namespace mwp
