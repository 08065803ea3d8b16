#include "mwp/multiwp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mwp/lattice.hpp"
#include "mwp/meisenstein.hpp"
#include "mwp/mzv.hpp"
#include "mwp/weierstrass.hpp"

namespace mwp {

namespace {

void require_parts_ge2(const Index& index, const char* who) {
  if (!index.admissible_for_lattice()) throw std::invalid_argument(std::string(who) + ": parts must be >= 2");
}

std::vector<ChainFactor> chain(const Index& index, const std::vector<Complex>& shifts) {
  if (shifts.size() != index.depth()) throw std::invalid_argument("one argument per index part is required");
  std::vector<ChainFactor> f;
  for (std::size_t j = 0; j < index.depth(); ++j) f.push_back({index[j], shifts[j]});
  return f;
}

Index repeated_two(int r) { return Index(std::vector<int>(static_cast<std::size_t>(std::max(r, 0)), 2)); }

int sign_of(int e) { return e % 2 ? -1 : 1; }

}  // namespace

Estimate multiwp_direct(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  require_parts_ge2(index, "multiwp_direct");
  if (index.empty()) return {1.0, 0.0};
  return multiwp_multivar(index, std::vector<Complex>(index.depth(), z), tau, cfg);
}

Estimate multiwp_tilde(const Index& index, const std::vector<Complex>& x, const ModularPoint& tau,
                       const EvalConfig& cfg) {
  require_parts_ge2(index, "multiwp_tilde");
  if (index.empty()) return {1.0, 0.0};
  return lattice_chain_limit(chain(index, x), tau, LatticeRegion::PositiveHalf, -1, cfg);
}

Estimate multiwp_multivar(const Index& index, const std::vector<Complex>& z, const ModularPoint& tau,
                          const EvalConfig& cfg) {
  require_parts_ge2(index, "multiwp_multivar");
  if (index.empty()) return {1.0, 0.0};
  return lattice_chain_limit(chain(index, z), tau, LatticeRegion::Full, -1, cfg);
}

Complex multiwp_multivar_decomposed(const Index& index, const std::vector<Complex>& z, const ModularPoint& tau,
                                    const EvalConfig& cfg) {
  require_parts_ge2(index, "multiwp_multivar");
  const std::size_t r = index.depth();
  if (z.size() != r) throw std::invalid_argument("one argument per index part is required");
  // wp~_{k_i..k_1}(-z_i..-z_1) and wp~_{k_{i+1}..k_r}(z_{i+1}..z_r)
  auto left = [&](std::size_t i) {
    std::vector<Complex> x;
    std::vector<int> k;
    for (std::size_t j = i; j-- > 0;) {
      k.push_back(index[j]);
      x.push_back(-z[j]);
    }
    return multiwp_tilde(Index(k), x, tau, cfg).value;
  };
  auto right = [&](std::size_t i) {
    std::vector<Complex> x(z.begin() + static_cast<long>(i), z.end());
    return multiwp_tilde(index.slice(i, r), x, tau, cfg).value;
  };
  Complex total = 0.0;
  int weight = 0;
  for (std::size_t i = 0; i <= r; ++i) {
    total += static_cast<double>(sign_of(weight)) * left(i) * right(i);
    if (i < r) {
      total += std::pow(z[i], -index[i]) * static_cast<double>(sign_of(weight)) * left(i) * right(i + 1);
      weight += index[i];
    }
  }
  return total;
}

GtMonomial gt_monomial(std::vector<Index> factors) {
  factors.erase(std::remove_if(factors.begin(), factors.end(), [](const Index& i) { return i.empty(); }),
                factors.end());
  std::sort(factors.begin(), factors.end());
  return factors;
}

void gt_add(GtPolynomial& p, const GtMonomial& m, const Rational& c) {
  if (c == 0) return;
  Rational& slot = p[m];
  slot += c;
  slot.canonicalize();
  if (slot == 0) p.erase(m);
}

std::string gt_str(const GtPolynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    const bool unit = a == 1;
    if (!unit || m.empty()) os << to_string(a);
    for (std::size_t j = 0; j < m.size(); ++j) os << (j || !unit ? "*" : "") << "G~(" << m[j].str() << ")";
  }
  return os.str();
}

GtEvaluator::GtEvaluator(const ModularPoint& tau, const EvalConfig& cfg) : tau_(tau), cfg_(cfg) {}

Complex GtEvaluator::symbol(const Index& index) {
  if (index.empty()) return 1.0;
  auto it = cache_.find(index);
  if (it != cache_.end()) return it->second;
  Complex v;
  if (index.depth() == 1 && index[0] % 2 == 0) {
    v = eisenstein_G(index[0], tau_, cfg_) / 2.0;
  } else {
    try {
      v = meis_qexp(index, tau_, cfg_).value;
    } catch (const std::runtime_error&) {
      v = meis_direct(index, tau_, cfg_).value;
    }
  }
  cache_.emplace(index, v);
  return v;
}

Complex GtEvaluator::monomial(const GtMonomial& m) {
  Complex v = 1.0;
  for (const Index& i : m) v *= symbol(i);
  return v;
}

Complex GtEvaluator::polynomial(const GtPolynomial& p) {
  Complex v = 0.0;
  for (const auto& [m, c] : p) v += c.get_d() * monomial(m);
  return v;
}

Complex ReducedForm::evaluate(Complex z, GtEvaluator& gt, const EvalConfig& cfg) const {
  Complex v = gt.polynomial(constant);
  for (const auto& [n, c] : wp_terms) v += gt.polynomial(c) * wp_k(n, z, gt.tau(), cfg);
  return v;
}

Complex ReducedForm::evaluate(Complex z, const ModularPoint& tau, const EvalConfig& cfg) const {
  GtEvaluator gt(tau, cfg);
  return evaluate(z, gt, cfg);
}

ReducedForm ReducedForm::reflected() const {
  ReducedForm out;
  out.index = index.reversed();
  const int k = index.weight();
  for (const auto& [n, c] : wp_terms) {
    GtPolynomial p;
    for (const auto& [m, a] : c) gt_add(p, m, a * sign_of(k + n));
    if (!p.empty()) out.wp_terms[n] = p;
  }
  for (const auto& [m, a] : constant) gt_add(out.constant, m, a * sign_of(k));
  return out;
}

std::string ReducedForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : wp_terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << gt_str(c) << ")*wp" << n;
  }
  if (!constant.empty() || first) os << (first ? "" : " + ") << "(" << gt_str(constant) << ")";
  return os.str();
}

ReducedForm multiwp_reduce(const Index& index) {
  require_parts_ge2(index, "multiwp_reduce");
  ReducedForm out;
  out.index = index;
  const std::size_t r = index.depth();
  if (r == 0) {
    gt_add(out.constant, {}, 1);
    return out;
  }
  const int k = index.weight();
  std::vector<int> n(r);
  // symbols G~_{n_{i-1},...,n_1} and G~_{n_{i+1},...,n_r}
  auto boundary = [&](std::size_t i) {
    std::vector<int> left, right;
    for (std::size_t l = i; l-- > 0;) left.push_back(n[l]);
    for (std::size_t l = i + 1; l < r; ++l) right.push_back(n[l]);
    return gt_monomial({Index(left), Index(right)});
  };
  auto binomials = [&](std::size_t i) {
    Integer c = 1;
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) c *= binomial(n[l] - 1, index[l] - 1);
    return c;
  };
  auto tail_sum = [&](std::size_t from) {
    int s = 0;
    for (std::size_t l = from; l < r; ++l) s += n[l];
    return s;
  };
  for (std::size_t i = 0; i < r; ++i) {
    // n_j >= k_j for j != i, the rest goes to n_i
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int used) {
      if (j == r) {
        n[i] = k - used;
        const Integer c = binomials(i);
        if (c == 0) return;
        const GtMonomial m = boundary(i);
        if (n[i] >= 2) {
          const Rational a(c * sign_of(index[i] + tail_sum(i)));
          GtPolynomial& slot = out.wp_terms[n[i]];
          gt_add(slot, m, a);
          if (n[i] % 2 == 0) {
            // G_n = 2 G~_n
            GtMonomial with_g = m;
            with_g.push_back(Index{n[i]});
            gt_add(out.constant, gt_monomial(with_g), -2 * a);
          }
        } else if (n[i] == 0) {
          gt_add(out.constant, m, Rational(c * sign_of(index[i] + tail_sum(i + 1))));
        }
        return;
      }
      if (j == i) return rec(j + 1, used);
      for (int v = index[j]; used + v <= k; ++v) {
        n[j] = v;
        rec(j + 1, used + v);
      }
    };
    rec(0, 0);
  }
  int tail = k;
  for (std::size_t i = 0; i <= r; ++i) {
    std::vector<int> left(index.parts().begin(), index.parts().begin() + static_cast<long>(i));
    std::reverse(left.begin(), left.end());
    gt_add(out.constant, gt_monomial({Index(left), index.slice(i, r)}), sign_of(tail));
    if (i < r) tail -= index[i];
  }
  for (auto it = out.wp_terms.begin(); it != out.wp_terms.end();) it = it->second.empty() ? out.wp_terms.erase(it) : std::next(it);
  return out;
}

Complex QFactor::value(Complex z, const std::vector<Complex>& x, const ModularPoint& tau,
                       const EvalConfig& cfg) const {
  if (i < 1 || i > r || static_cast<int>(x.size()) != r) throw std::invalid_argument("QFactor: bad shape");
  std::vector<Complex> a, b;
  for (int j = i + 1; j <= r; ++j) a.push_back(z - x[j - 1]);
  for (int j = i - 1; j >= 1; --j) b.push_back(x[j - 1] - z);
  return multiwp_tilde(repeated_two(r - i), a, tau, cfg).value * multiwp_tilde(repeated_two(i - 1), b, tau, cfg).value;
}

Complex QFactor::x_derivative(const std::vector<Complex>& x, const ModularPoint& tau, const EvalConfig& cfg) const {
  if (i < 1 || i > r || static_cast<int>(x.size()) != r) throw std::invalid_argument("QFactor: bad shape");
  const Complex xi = x[i - 1];
  std::vector<Complex> a, b;
  for (int j = i + 1; j <= r; ++j) a.push_back(xi - x[j - 1]);
  for (int j = i - 1; j >= 1; --j) b.push_back(x[j - 1] - xi);
  // d/dy_j wp~_{..2..}(y) = -2 wp~_{..3..}(y)
  auto value_and_gradient = [&](const std::vector<Complex>& y, double dy) {
    const Index two = repeated_two(static_cast<int>(y.size()));
    const Complex v = multiwp_tilde(two, y, tau, cfg).value;
    Complex d = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::vector<int> bumped = two.parts();
      bumped[j] = 3;
      d += -2.0 * dy * multiwp_tilde(Index(bumped), y, tau, cfg).value;
    }
    return std::pair<Complex, Complex>{v, d};
  };
  const auto [va, da] = value_and_gradient(a, 1.0);
  const auto [vb, db] = value_and_gradient(b, -1.0);
  return da * vb + va * db;
}

Complex antipode_residual(int r, const std::vector<Complex>& x, const ModularPoint& tau, const EvalConfig& cfg) {
  if (r < 1 || static_cast<int>(x.size()) != r) throw std::invalid_argument("antipode_residual: need r arguments");
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      if (std::abs(x[a] - x[b]) < 1e-12) throw std::invalid_argument("antipode_residual: arguments must be distinct");
  Complex total = 0.0;
  for (int i = 1; i <= r; ++i) total += QFactor{r, i}.x_derivative(x, tau, cfg);
  return total;
}

Complex FourierCoefficient::value() const {
  return rational.get_d() * std::pow(Complex(0, 2 * kPi), two_pi_i_power);
}

FourierCoefficient multiwp22_coefficient(int r, int j) {
  if (r < 0 || j < 0 || j > r) throw std::invalid_argument("multiwp22_coefficient: need 0 <= j <= r");
  if (r == 0) return {Rational(1), 0};
  Integer total = 0;
  for (const Index& parts : compositions(r, 1)) {
    if (static_cast<int>(parts.depth()) != j) continue;
    Integer m = factorial(2 * r);
    for (int p : parts.parts()) m /= factorial(2 * p);
    total += m;
  }
  Rational c(total * (Integer(1) << static_cast<unsigned>(j)), factorial(2 * r));
  c.canonicalize();
  if ((r - j) % 2) c = -c;
  return {c, 2 * (r - j)};
}

Complex multiwp22_fourier(int r, Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  if (r < 0) throw std::invalid_argument("multiwp22_fourier: r must be >= 0");
  if (!(z.imag() > 0 && z.imag() < tau.tau().imag())) throw std::domain_error("multiwp22_fourier: requires 0 < Im z < Im tau");
  if (r == 0) return 1.0;
  std::vector<Complex> plus(r + 1), minus(r + 1);
  for (int a = 0; a <= r; ++a) {
    plus[a] = g_function(repeated_two(a), z, tau, cfg).value;
    minus[a] = g_function_reflected(repeated_two(a), z, tau, cfg).value;
  }
  const Complex xi = std::exp(Complex(0, 2 * kPi) * z);
  const Complex psi2 = std::pow(Complex(0, 2 * kPi), 2) * xi / ((1.0 - xi) * (1.0 - xi));
  Complex total = 0.0;
  for (int j = 1; j <= r; ++j) {
    const Complex c = multiwp22_coefficient(r, j).value();
    for (int i = 0; i <= j; ++i) {
      Complex inner = minus[j - i];
      if (j - i >= 1) inner += psi2 * minus[j - i - 1];
      total += c * plus[i] * inner;
    }
  }
  return total;
}

Complex multiwp_tilde_fourier(const Index& index, Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  require_parts_ge2(index, "multiwp_tilde_fourier");
  if (!(z.imag() > 0 && z.imag() < tau.tau().imag()))
    throw std::domain_error("multiwp_tilde_fourier: requires 0 < Im z < Im tau");
  const std::size_t r = index.depth();
  if (r == 0) return 1.0;
  std::map<Index, MultitangentReduction> reductions;
  std::map<Index, Complex> g_values;
  Complex total = 0.0;
  for (std::size_t t = 0; t <= r; ++t) {
    const Index head = index.slice(0, t), rest = index.slice(t, r);
    const Complex hz = head.empty() ? Complex(1.0) : hurwitz_mzv(head, z, cfg.precision).value;
    if (rest.empty()) {
      total += hz;
      continue;
    }
    for (const WordDecomposition& w : word_decompositions(rest)) {
      // expand the product of block reductions into g-function indices
      std::map<Index, double> expanded{{Index{}, 1.0}};
      for (const Index& blk : w.blocks) {
        auto it = reductions.find(blk);
        if (it == reductions.end()) it = reductions.emplace(blk, multitangent_reduce(blk)).first;
        std::map<Index, double> next;
        for (const auto& [idx, c] : expanded)
          for (const auto& [n, combo] : it->second.terms) {
            std::vector<int> parts = idx.parts();
            parts.push_back(n);
            next[Index(parts)] += c * it->second.coefficient_value(n);
          }
        expanded = std::move(next);
      }
      for (const auto& [idx, c] : expanded) {
        auto g = g_values.find(idx);
        if (g == g_values.end()) g = g_values.emplace(idx, g_function(idx, z, tau, cfg).value).first;
        total += hz * c * g->second;
      }
    }
  }
  return static_cast<double>(sign_of(index.weight())) * total;
}

double modular_transform_check(int r, const SL2Z& g, Complex z, const ModularPoint& tau, const EvalConfig& cfg) {
  if (g.a * g.d - g.b * g.c != 1) throw std::invalid_argument("modular_transform_check: matrix must have determinant 1");
  if (r < 0) throw std::invalid_argument("modular_transform_check: r must be >= 0");
  if (r == 0) return 0.0;
  const Complex t = tau.tau();
  const Complex j = static_cast<double>(g.c) * t + static_cast<double>(g.d);
  const ModularPoint gt((static_cast<double>(g.a) * t + static_cast<double>(g.b)) / j);
  const Complex lhs = std::pow(j, -2 * r) * multiwp_direct(repeated_two(r), z / j, gt, cfg).value;
  Complex rhs = 0.0;
  const Complex factor = Complex(0, -2 * kPi) * static_cast<double>(g.c) / j;
  for (int s = 0; s <= r; ++s) {
    const Complex wp = s == 0 ? Complex(1.0) : multiwp_direct(repeated_two(s), z, tau, cfg).value;
    rhs += std::pow(factor, r - s) / factorial(r - s).get_d() * wp;
  }
  return std::abs(lhs - rhs);
}

}  // namespace mwp
