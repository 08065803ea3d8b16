#include <cmath>
#include <random>

#include "doctest.h"
#include "mwp/lattice.hpp"
#include "mwp/weierstrass.hpp"

using namespace mwp;

namespace {

const ModularPoint kI{Complex(0, 1)};
const ModularPoint k2I{Complex(0, 2)};
const ModularPoint kRho{Complex(0.5, std::sqrt(3.0) / 2)};
const ModularPoint kGeneric{Complex(0.23, 1.07)};

Complex random_point(std::mt19937& rng, double re, double im) {
  std::uniform_real_distribution<double> a(-re, re), b(-im, im);
  return {a(rng), b(rng)};
}

SymPoly G(int n) { return SymPoly::G(n); }
SymPoly P() { return SymPoly::P(); }
Rational fac(int n) { return Rational(factorial(n)); }

// n-th derivative at z0 from a small Cauchy circle.
Complex derivative_at(const std::function<Complex(Complex)>& f, Complex z0, int n, double radius) {
  auto c = laurent_coefficients(f, z0, radius, n, n, 64);
  return c[0] * fac(n).get_d();
}

}  // namespace

TEST_SUITE("weierstrass") {

TEST_CASE("G_k: odd weights vanish, fast path matches the lattice sum") {
  CHECK(eisenstein_G(5, kI) == Complex(0.0));
  CHECK(eisenstein_G(3, kGeneric) == Complex(0.0));
  CHECK_THROWS_AS(eisenstein_G(1, kI), std::invalid_argument);
  EvalConfig cfg;
  for (const ModularPoint& t : {kI, kGeneric}) {
    for (int k : {2, 4, 6}) {
      const Estimate slow = eisenstein_G_direct(k, t, cfg);
      CHECK(std::abs(slow.value - eisenstein_G(k, t)) < cfg.tolerance);
      CHECK(slow.error < cfg.tolerance);
    }
  }
}

TEST_CASE("G_k special values and the weight-8 identity") {
  // lemniscate constant: G_4(i) = varpi^4 / 15, G_2(i) = pi
  const double varpi = std::pow(std::tgamma(0.25), 2) / (2 * std::sqrt(2 * kPi));
  CHECK(std::abs(eisenstein_G(4, kI) - std::pow(varpi, 4) / 15) < 1e-12);
  CHECK(std::abs(eisenstein_G(2, kI) - kPi) < 1e-12);
  CHECK(std::abs(eisenstein_G(6, kI)) < 1e-12);
  CHECK(std::abs(eisenstein_G(4, kRho)) < 1e-12);
  for (const ModularPoint& t : {kI, kRho, kGeneric, k2I}) {
    const Complex g4 = eisenstein_G(4, t), g6 = eisenstein_G(6, t);
    CHECK(std::abs(eisenstein_G(8, t) - 3.0 / 7.0 * g4 * g4) < 1e-12 * std::max(1.0, std::abs(g4 * g4)));
    CHECK(std::abs(eisenstein_G(10, t) - 5.0 / 11.0 * g4 * g6) < 1e-12 * std::max(1.0, std::abs(g4 * g6)));
  }
  // G_2 is only quasi-modular: tau^-2 G_2(-1/tau) = G_2(tau) - 2 pi i / tau
  const Complex t = kGeneric.tau();
  const Complex lhs = eisenstein_G(2, ModularPoint(-1.0 / t)) / (t * t);
  CHECK(std::abs(lhs - (eisenstein_G(2, kGeneric) - kTwoPiI / t)) < 1e-11);
  auto table = eisenstein_table(kGeneric, 12);
  REQUIRE(table.size() == 13);
  CHECK(table[0] == Complex(-1.0));
  CHECK(std::abs(table[12] - eisenstein_G(12, kGeneric)) == 0.0);
}

TEST_CASE("sigma: zero, oddness, series against product") {
  CHECK(sigma(0.0, kI) == Complex(0.0));
  std::mt19937 rng(7);
  for (int i = 0; i < 10; ++i) {
    const Complex z = random_point(rng, 1.5, 3.0);
    const Complex s = sigma(z, k2I);
    CHECK(std::abs(sigma(-z, k2I) + s) < 1e-12 * std::max(1.0, std::abs(s)));
  }
  EvalConfig cfg;
  for (Complex z : {Complex(0.3), Complex(0.1, 0.5), Complex(-0.6, 0.2), Complex(0.55, -0.5)}) {
    const Complex a = sigma(z, kI, cfg, SigmaForm::Series);
    const Complex b = sigma(z, kI, cfg, SigmaForm::Product);
    CHECK(std::abs(a - b) < cfg.tolerance * 1e-4);
  }
  CHECK_THROWS_AS(sigma(Complex(0.9), kI, cfg, SigmaForm::Series), std::domain_error);
  // zeros exactly on the lattice, quasi-periodic growth elsewhere
  CHECK(std::abs(sigma(1.0 + 0.0 * kI.tau(), kI)) < 1e-12);
  CHECK(std::abs(sigma(kGeneric.tau(), kGeneric)) < 1e-12);
}

TEST_CASE("Weierstrass zeta: oddness, Legendre relation, Laurent data") {
  const ModularPoint t12(Complex(1, 2));
  std::mt19937 rng(11);
  for (int i = 0; i < 10; ++i) {
    const Complex z = random_point(rng, 1.0, 2.0);
    const Complex v = weier_zeta(z, t12);
    CHECK(std::abs(weier_zeta(-z, t12) + v) < 1e-12 * std::max(1.0, std::abs(v)));
  }
  for (const ModularPoint& t : {kI, kRho, kGeneric}) {
    const QuasiPeriods eta = quasi_periods(t);
    CHECK(std::abs(eta.eta_1 * t.tau() - eta.eta_tau - kTwoPiI) < 1e-10);
  }
  EvalConfig cfg;
  for (Complex z : {Complex(0.2, 0.1), Complex(-0.5, 0.3)}) {
    CHECK(std::abs(weier_zeta(z, kI) - weier_zeta_series(z, kI)) < 1e-11);
    // sigma'/sigma
    auto ratio = derivative_at([](Complex u) { return sigma(u, kI); }, z, 1, 0.05) / sigma(z, kI);
    CHECK(std::abs(ratio - weier_zeta(z, kI)) < 1e-9);
  }
  auto c = laurent_coefficients([](Complex z) { return weier_zeta(z, k2I); }, 0.0, laurent_radius(k2I), -1, 3);
  CHECK(std::abs(c[0] - 1.0) < 1e-12);
  CHECK(std::abs(c[2] + eisenstein_G(2, k2I)) < 1e-10);
  CHECK(std::abs(c[4] + eisenstein_G(4, k2I)) < 1e-10);
  CHECK_THROWS_AS(weier_zeta(kI.tau() + 1.0, kI), std::domain_error);
}

TEST_CASE("wp_k: normalization, derivatives and the lattice sum") {
  std::mt19937 rng(5);
  for (int i = 0; i < 5; ++i) {
    const Complex z = random_point(rng, 0.5, 0.5) + Complex(0.01, 0.02);
    CHECK(std::abs(wp_k(2, z, kGeneric) - wp(z, kGeneric) - eisenstein_G(2, kGeneric)) < 1e-12);
    const Complex numeric = derivative_at([](Complex u) { return wp(u, kGeneric); }, z, 1, 0.005);
    CHECK(std::abs(wp_k(3, z, kGeneric) + numeric / 2.0) < 1e-8 * std::max(1.0, std::abs(numeric)));
    // wp_4 = wp''/6
    const Complex second = derivative_at([](Complex u) { return wp(u, kGeneric); }, z, 2, 0.005);
    CHECK(std::abs(wp_k(4, z, kGeneric) - second / 6.0) < 1e-7 * std::max(1.0, std::abs(second)));
  }
  EvalConfig cfg;
  const Estimate direct =
      lattice_chain_limit({ChainFactor{4, Complex(0.4)}}, kI, LatticeRegion::Full, 1, cfg);
  CHECK(std::abs(direct.value - wp_k(4, 0.4, kI)) < cfg.tolerance);
  const Estimate direct2 =
      lattice_chain_limit({ChainFactor{2, Complex(0.2, 0.4)}}, k2I, LatticeRegion::Full, 1, cfg);
  CHECK(std::abs(direct2.value - wp_k(2, Complex(0.2, 0.4), k2I)) < cfg.tolerance);
  // periodicity
  const Complex z(0.31, 0.17);
  CHECK(std::abs(wp(z + kGeneric.tau() - 2.0, kGeneric) - wp(z, kGeneric)) < 1e-11);
  // Laurent: 1/z^2 + sum (k+1) G_{k+2} z^k
  auto c = laurent_coefficients([](Complex u) { return wp_k(2, u, kI); }, 0.0, laurent_radius(kI), -2, 6);
  CHECK(std::abs(c[0] - 1.0) < 1e-12);
  CHECK(std::abs(c[1]) < 1e-12);
  for (int k = 0; k <= 4; k += 2) CHECK(std::abs(c[k + 2] - double(k + 1) * eisenstein_G(k + 2, kI)) < 1e-9);
  CHECK_THROWS_AS(wp_k(1, z, kI), std::invalid_argument);
  CHECK_THROWS_AS(wp_k(3, kI.tau(), kI), std::domain_error);
}

TEST_CASE("differential equation of wp") {
  for (const ModularPoint& t : {kI, kGeneric}) {
    const Complex z(0.27, 0.19);
    const Complex p = wp(z, t), pd = wp_prime(z, t);
    const Complex g4 = eisenstein_G(4, t), g6 = eisenstein_G(6, t);
    CHECK(std::abs(pd * pd - (4.0 * p * p * p - 60.0 * g4 * p - 140.0 * g6)) < 1e-10 * std::abs(pd * pd));
  }
}

TEST_CASE("even derivatives of wp_2 as polynomials in wp") {
  CHECK(wp_deriv_poly(1) == WpPolynomial::wp_power(1) + WpPolynomial::constant(G(2)));
  const auto poly = [](std::initializer_list<std::pair<int, SymPoly>> terms, int n) {
    WpPolynomial p;
    for (const auto& [s, c] : terms) p.add(s, 0, c * fac(n));
    return p;
  };
  CHECK(wp_deriv_poly(2) == poly({{2, 3}, {0, G(4) * -15}}, 2));
  CHECK(wp_deriv_poly(3) == poly({{3, 5}, {1, G(4) * -45}, {0, G(6) * -70}}, 4));
  CHECK(wp_deriv_poly(4) == poly({{4, 7}, {2, G(4) * -84}, {1, G(6) * -140}, {0, G(4) * G(4) * 45}}, 6));
  CHECK(wp_deriv_poly(5) == poly({{5, 9},
                                  {3, G(4) * -135},
                                  {2, G(6) * -225},
                                  {1, G(4) * G(4) * 270},
                                  {0, G(4) * G(6) * 495}},
                                 8));
  CHECK(wp_deriv_poly(6) == poly({{6, 11},
                                  {4, G(4) * -198},
                                  {3, G(6) * -330},
                                  {2, G(4) * G(4) * 693},
                                  {1, G(4) * G(6) * 1710},
                                  {0, G(6) * G(6) * 700 - G(4).pow(3) * 90}},
                                 10));
  for (int k = 1; k <= 8; ++k) {
    const WpPolynomial p = wp_deriv_poly(k);
    CHECK(p.degree_in_wp() == k);
    CHECK(p.coefficient(k, 0) == SymPoly(fac(2 * k - 1)));
    for (const auto& [key, c] : p.terms())
      for (const auto& [mono, q] : c.terms()) {
        if (k == 1) continue;
        CHECK(weight(mono) == 2 * (k - key.first));
        for (const Symbol& s : mono) CHECK((s.index[0] == 4 || s.index[0] == 6));
      }
    // two symbolic routes agree
    WpPolynomial d = WpPolynomial::wp_power(1) + WpPolynomial::constant(G(2));
    for (int i = 0; i < 2 * k - 2; ++i) d = d.derivative();
    CHECK(d == p);
  }
  // numeric: wp_2'' from a Cauchy circle
  const Complex z(0.3, 0.05);
  const Complex numeric = derivative_at([](Complex u) { return wp_k(2, u, kI); }, z, 2, 0.01);
  CHECK(std::abs(wp_deriv_poly(2).evaluate(z, kI) - numeric) < 1e-7 * std::abs(numeric));
}

TEST_CASE("odd derivatives carry one factor of wp'") {
  const WpPolynomial d = wp2_derivative(3);
  for (const auto& [key, c] : d.terms()) CHECK(key.second == 1);
  const Complex z(0.21, 0.13);
  const Complex numeric = derivative_at([](Complex u) { return wp(u, kGeneric); }, z, 3, 0.01);
  CHECK(std::abs(d.evaluate(z, kGeneric) - numeric) < 1e-6 * std::abs(numeric));
}

TEST_CASE("trace forms of wp_2^{(2k-2)}") {
  const TraceForms one = wp_deriv_trace_form(1);
  CHECK(one.in_multiple_wp == SymPoly::Wp(Index{2}));
  CHECK(one.in_eisenstein == P() + G(2));
  for (int k = 1; k <= 6; ++k) {
    const TraceForms f = wp_deriv_trace_form(k);
    const SymPoly target = wp_deriv_poly(k).to_sympoly().reduce_to_g4_g6();
    CHECK(f.in_eisenstein.reduce_to_g4_g6() == target);
    const SymPoly expanded = f.in_multiple_wp.substitute([](const Symbol& s) {
      return s.kind == Symbol::Kind::Wp ? repeated_index_closed_form(2, static_cast<int>(s.index.depth())).to_sympoly()
                                        : SymPoly(s);
    });
    CHECK(expanded.reduce_to_g4_g6() == target);
  }
  // numeric cross-check at z = 0.3, tau = i
  const TraceForms f2 = wp_deriv_trace_form(2);
  const Complex z(0.3);
  const Complex p = wp(z, kI);
  const Complex by_eisenstein = f2.in_eisenstein.evaluate<Complex>([&](const Symbol& s) -> Complex {
    if (s.kind == Symbol::Kind::P) return p;
    return eisenstein_G(s.index[0], kI);
  });
  CHECK(std::abs(by_eisenstein - wp_deriv_poly(2).evaluate(z, kI)) < 1e-10 * std::abs(by_eisenstein));
}

TEST_CASE("repeated index {2}^r") {
  CHECK(repeated_f(1) == SymPoly(1));
  CHECK(repeated_g(1).is_zero());
  CHECK(repeated_ghat(1) == G(2));
  CHECK(repeated_index_closed_form(2, 1) == WpPolynomial::wp_power(1) + WpPolynomial::constant(G(2)));
  CHECK(repeated_index_closed_form(2, 2) ==
        WpPolynomial::wp_power(1, G(2)) + WpPolynomial::constant((G(2) * G(2) + G(4) * 5) * Rational(1, 2)));
  CHECK(repeated_f(3) == (G(2) * G(2) - G(4)) * Rational(1, 2));
  CHECK(repeated_ghat(3) ==
        G(2).pow(3) * Rational(1, 6) + G(2) * G(4) * Rational(5, 2) - G(6) * Rational(14, 3));
  CHECK(repeated_f(4) == G(2).pow(3) * Rational(1, 6) - G(2) * G(4) * Rational(1, 2) + G(6) * Rational(1, 3));
  for (int r = 1; r <= 6; ++r) {
    const WpPolynomial a = repeated_index_closed_form(2, r).reduce_to_g4_g6();
    const WpPolynomial b = repeated_index_via_derivatives(2, r).reduce_to_g4_g6();
    CHECK(a == b);
    CHECK(b.degree_in_wp(0) <= 1);
    CHECK(b.degree_in_wp(1) == -1);
  }
  CHECK_THROWS_AS(repeated_index_closed_form(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(repeated_index_closed_form(2, 0), std::invalid_argument);
}

TEST_CASE("repeated index {3}^r and general h") {
  CHECK(repeated_index_closed_form(3, 1) == WpPolynomial::wp_prime_times_power(0, SymPoly(Rational(-1, 2))));
  CHECK(repeated_index_closed_form(3, 3) == WpPolynomial::wp_prime_times_power(0, G(6) * Rational(1, 4)));
  for (int r : {1, 3, 5, 7}) {
    CHECK(repeated_index_closed_form(3, r).reduce_to_g4_g6() ==
          repeated_index_via_derivatives(3, r).reduce_to_g4_g6());
  }
  for (int h = 2; h <= 5; ++h)
    for (int r = 1; r <= 4; ++r) {
      const WpPolynomial p = repeated_index_via_derivatives(h, r).reduce_to_g4_g6();
      // pole order at most h
      for (const auto& [key, c] : p.terms()) CHECK(2 * key.first + 3 * key.second <= h);
      // leading coefficient: wp_{h} = (-1)^h/(h-1)! wp^{(h-2)} has top term wp^{h/2} or wp' wp^{(h-3)/2}
      const WpPolynomial single = repeated_index_via_derivatives(h, 1);
      const auto top = h % 2 ? std::pair{(h - 3) / 2, 1} : std::pair{h / 2, 0};
      const SymPoly lead = p.coefficient(top.first, top.second);
      const SymPoly unit = single.coefficient(top.first, top.second);
      CHECK(lead == (repeated_leading(h, r) * unit).reduce_to_g4_g6());
    }
}

TEST_CASE("generating function in sigma") {
  EvalConfig cfg;
  for (int h : {2, 3}) {
    for (const ModularPoint& t : {kI, kGeneric}) {
      const Complex z(0.27, 0.11);
      const Complex mu = std::polar(1.0, 2 * kPi / h);
      auto f = [&](Complex y) {
        Complex prod = std::pow(sigma(z, t), -h);
        for (int j = 0; j < h; ++j) prod *= sigma(z - std::pow(mu, j) * y, t);
        return prod;
      };
      auto c = laurent_coefficients(f, 0.0, 0.35, 0, 4 * h);
      for (int r = 1; r <= 4; ++r) {
        const Complex expected = (r % 2 ? -1.0 : 1.0) * repeated_index_via_derivatives(h, r).evaluate(z, t);
        CHECK(std::abs(c[h * r] - expected) < 100 * cfg.tolerance * std::max(1.0, std::abs(expected)));
      }
    }
  }
}

TEST_CASE("sigma identities") {
  std::mt19937 rng(3);
  const Complex mu = std::polar(1.0, 2 * kPi / 3);
  for (int i = 0; i < 5; ++i) {
    const ModularPoint t(Complex(std::uniform_real_distribution<double>(-0.5, 0.5)(rng),
                                 std::uniform_real_distribution<double>(0.9, 1.6)(rng)));
    const Complex z = random_point(rng, 0.4, 0.4), y = random_point(rng, 0.4, 0.4);
    auto s = [&](Complex u) { return sigma(u, t); };
    auto prod3 = [&](Complex base, double sgn) {
      Complex p = 1.0;
      for (int j = 0; j < 3; ++j) p *= s(base + sgn * std::pow(mu, j) * y);
      return p;
    };
    const Complex lhs = s(2.0 * z) * prod3(0.0, 1.0);
    const Complex rhs = s(z) * prod3(z, 1.0) - s(z) * prod3(z, -1.0);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));

    Complex zsum = 0.0;
    for (int j = 0; j < 3; ++j) zsum += weier_zeta(std::pow(mu, j) * y, t);
    const Complex lhs2 = 2.0 * s(z) * s(y) * s(z + y) * s(z - y) * zsum * prod3(0.0, 1.0);
    Complex py = 1.0;
    for (int j = 0; j < 3; ++j) py *= s(y + std::pow(mu, j) * y);
    const Complex rhs2 = std::pow(s(z), 3) * py - std::pow(s(y), 3) * prod3(z, -1.0) - std::pow(s(y), 3) * prod3(z, 1.0);
    CHECK(std::abs(lhs2 - rhs2) < 1e-10 * std::max(1.0, std::abs(lhs2)));

    CHECK(std::abs(-2.0 * wp_k(3, y, t) + s(2.0 * y) / std::pow(s(y), 4)) < 1e-10 * std::abs(wp_k(3, y, t)));
    const Complex diff = wp_k(2, y, t) - wp_k(2, z, t);
    CHECK(std::abs(diff - s(z + y) * s(z - y) / (s(y) * s(y) * s(z) * s(z))) < 1e-10 * std::max(1.0, std::abs(diff)));
  }
}

}  // TEST_SUITE
