#include "mwp/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace mwp {

Complex ModularPoint::q() const { return std::exp(kTwoPiI * tau_); }

double ModularPoint::shortest_vector() const {
  // Gauss reduction of the basis (1, tau).
  Complex a(1.0, 0.0), b = tau_;
  if (std::abs(b) < std::abs(a)) std::swap(a, b);
  for (int iter = 0; iter < 200; ++iter) {
    const double mu = std::round((b * std::conj(a)).real() / std::norm(a));
    b -= mu * a;
    if (std::abs(b) >= std::abs(a)) break;
    std::swap(a, b);
  }
  return std::min(std::abs(a), std::abs(b));
}

namespace {

bool parse_real(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&raw]() -> Complex {
    throw std::invalid_argument("malformed complex literal: '" + raw + "'");
  };
  if (s.empty()) return fail();
  if (s.back() != 'i' && s.back() != 'j') {
    double re = 0;
    if (!parse_real(s, re)) return fail();
    return {re, 0.0};
  }
  s.pop_back();
  // split at the last sign that is not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  double re = 0, im = 0;
  if (!re_part.empty() && !parse_real(re_part, re)) return fail();
  if (!parse_real(im_part, im)) return fail();
  return {re, im};
}

std::string format_complex(Complex z, int digits) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, z.real(), digits, z.imag());
  return buf;
}

}  // namespace mwp
