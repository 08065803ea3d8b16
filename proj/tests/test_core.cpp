#include <set>

#include "doctest.h"
#include "mwp/combination.hpp"
#include "mwp/config.hpp"
#include "mwp/index.hpp"
#include "mwp/series.hpp"
#include "mwp/symbolic.hpp"

using namespace mwp;

namespace {

std::vector<Index> all_compositions_up_to(int w) {
  std::vector<Index> out;
  for (int k = 0; k <= w; ++k)
    for (const Index& c : compositions(k, 1)) out.push_back(c);
  return out;
}

SymPoly x(int k) { return SymPoly::G(k); }  // formal variable X_k

}  // namespace

TEST_SUITE("core") {

TEST_CASE("partitions enumerate in a fixed order") {
  auto p0 = partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].size() == 0);
  auto p1 = partitions(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].parts() == std::vector<int>{1});
  auto p4 = partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0].parts() == std::vector<int>{4});
  CHECK(p4[1].parts() == std::vector<int>{3, 1});
  CHECK(p4[2].parts() == std::vector<int>{2, 2});
  CHECK(p4[3].parts() == std::vector<int>{2, 1, 1});
  CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int r = 0; r <= 10; ++r) CHECK(partitions(r).size() == static_cast<std::size_t>(counts[r]));
}

TEST_CASE("trace weights") {
  Partition l({{1, 2}, {3, 1}});  // (3,1,1)
  CHECK(l.size() == 5);
  CHECK(l.length() == 3);
  CHECK(trace_weight(TraceWeight::Beta, l) == Rational(1, 2 * 3));
  CHECK(trace_weight(TraceWeight::BetaPrime, l) == Rational(1, 6 * 8));
  CHECK(trace_weight(TraceWeight::PhiLog, l) == 1);
  CHECK(trace_weight(TraceWeight::PhiLog, Partition()) == 0);
}

TEST_CASE("partition traces") {
  std::vector<Rational> none;
  CHECK(partition_trace(TraceWeight::Beta, none, 0) == 1);
  std::vector<SymPoly> xs{x(1), x(2)};
  CHECK(partition_trace(TraceWeight::Beta, std::vector<SymPoly>{x(1)}, 1) == x(1));
  CHECK(partition_trace(TraceWeight::Beta, xs, 2) == x(1) * x(1) * Rational(1, 2) + x(2) * Rational(1, 2));
  CHECK_THROWS_AS(partition_trace(TraceWeight::Beta, xs, -1), std::invalid_argument);
  CHECK_THROWS_AS(partition_trace(TraceWeight::Beta, xs, 3), std::invalid_argument);
}

TEST_CASE("exp of a series matches the partition expansion") {
  const int order = 10;
  TruncatedSeries<SymPoly> s(Variable::Y, order);
  for (int k = 1; k <= order; ++k) s[k] = x(k);
  auto e = s.exp();
  for (int r = 0; r <= order; ++r) {
    SymPoly expected;
    for (const Partition& lambda : partitions(r)) {
      SymPoly term(1);
      for (const auto& [k, m] : lambda.multiplicities()) term *= x(k).pow(m) * (Rational(1) / Rational(factorial(m)));
      expected += term;
    }
    CHECK(e[r] == expected);
  }
}

TEST_CASE("log(1 - sum x_j Y^j) = -sum Tr_r(phi_log) Y^r") {
  const int order = 8;
  TruncatedSeries<SymPoly> s(Variable::Y, order);
  s[0] = SymPoly(1);
  std::vector<SymPoly> xs;
  for (int k = 1; k <= order; ++k) {
    s[k] = -x(k);
    xs.push_back(x(k));
  }
  auto l = s.log();
  for (int r = 1; r <= order; ++r) CHECK(l[r] == -partition_trace(TraceWeight::PhiLog, xs, r));
  CHECK(l[2] == -(x(2) + x(1) * x(1) * Rational(1, 2)));
}

TEST_CASE("stuffle examples") {
  Combination a = stuffle(Index{2}, Index{3});
  CHECK(a == Combination(Index{2, 3}) + Combination(Index{3, 2}) + Combination(Index{5}));
  CHECK(stuffle(Index{}, Index{4, 2, 3}) == Combination(Index{4, 2, 3}));
  CHECK(stuffle(Index{2}, Index{2}) == Combination(Index{2, 2}, 2) + Combination(Index{4}));
}

TEST_CASE("stuffle is commutative and associative up to weight 10") {
  auto idx = all_compositions_up_to(10);
  for (const Index& a : idx)
    for (const Index& b : idx)
      if (a.weight() + b.weight() <= 10) REQUIRE(stuffle(a, b) == stuffle(b, a));
  auto small = all_compositions_up_to(8);
  int checked = 0;
  for (const Index& a : small)
    for (const Index& b : small)
      for (const Index& c : small) {
        if (a.weight() + b.weight() + c.weight() > 10 || a.empty() || b.empty() || c.empty()) continue;
        REQUIRE(stuffle(stuffle(Combination(a), Combination(b)), Combination(c)) ==
                stuffle(Combination(a), stuffle(Combination(b), Combination(c))));
        ++checked;
      }
  CHECK(checked > 1000);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(13) == 0);
}

TEST_CASE("compositions into parts >= 2") {
  CHECK(compositions_ge2(2) == std::vector<Index>{Index{2}});
  CHECK(compositions_ge2(3) == std::vector<Index>{Index{3}});
  auto six = compositions_ge2(6);
  CHECK(six.size() == 5);
  std::set<Index> got(six.begin(), six.end());
  CHECK(got == std::set<Index>{Index{6}, Index{2, 4}, Index{4, 2}, Index{3, 3}, Index{2, 2, 2}});
  std::vector<long> a{1, 0};
  for (int k = 2; k <= 20; ++k) {
    long s = 0;
    for (int j = 2; j <= k; ++j) s += a[k - j];
    a.push_back(s);
    CHECK(compositions_ge2(k).size() == static_cast<std::size_t>(s));
  }
  CHECK(compositions_ge2(0) == std::vector<Index>{Index{}});
}

TEST_CASE("truncated series arithmetic") {
  using S = TruncatedSeries<Rational>;
  S one = S::constant(Variable::Y, 4, Rational(1));
  S s(Variable::Y, 4, {Rational(2), Rational(-1), Rational(0), Rational(5), Rational(1, 3)});
  CHECK((one * s).coefficients() == s.coefficients());
  S a(Variable::Y, 2, {Rational(1), Rational(1)});
  S b(Variable::Y, 2, {Rational(1), Rational(-1)});
  CHECK((a * b).coefficients() == std::vector<Rational>{1, 0, -1});
  S f(Variable::Y, 8, {Rational(0), Rational(1, 2), Rational(-3), Rational(1, 7), Rational(2)});
  S round = f.exp().log();
  CHECK(round.coefficients() == f.coefficients());
  S g = s.inverse() * s;
  CHECK(g.coefficients() == one.coefficients());
  S q(Variable::q, 4);
  CHECK_THROWS_AS(q * s, std::invalid_argument);
  CHECK(S(Variable::Y, 6) .truncated(3).order() == 3);
}

TEST_CASE("index parsing and admissibility") {
  CHECK(Index::parse("2,3") == Index{2, 3});
  CHECK(Index::parse("(2, 2, 3)") == Index{2, 2, 3});
  CHECK(Index::parse("") == Index{});
  CHECK(Index{2, 3}.weight() == 5);
  CHECK(Index{2, 3}.depth() == 2);
  CHECK(Index{2, 3}.admissible_for_lattice());
  CHECK_FALSE(Index{1, 3}.admissible_for_lattice());
  CHECK(Index{1, 3}.admissible_for_mzv());
  CHECK_FALSE(Index{3, 1}.admissible_for_mzv());
  CHECK(Index{2, 3, 4}.reversed() == Index{4, 3, 2});
  CHECK_THROWS(Index::parse("2,x"));
}

TEST_CASE("evaluation config and modular points") {
  EvalConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.N = cfg.M - 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = EvalConfig{};
  cfg.tolerance = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_THROWS_AS(ModularPoint(Complex(0.3, 0.0)), std::domain_error);
  ModularPoint t(Complex(0.5, std::sqrt(3.0) / 2));
  CHECK(t.shortest_vector() == doctest::Approx(1.0));
  CHECK(ModularPoint(Complex(0, 2)).shortest_vector() == doctest::Approx(1.0));
  CHECK(ModularPoint(Complex(0.1, 0.2)).shortest_vector() == doctest::Approx(std::abs(Complex(0.1, 0.2))));
  CHECK(std::abs(parse_complex("1-2.5i") - Complex(1, -2.5)) < 1e-15);
  CHECK(std::abs(parse_complex("i") - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(parse_complex("-i") - Complex(0, -1)) < 1e-15);
  CHECK(std::abs(parse_complex("0.5") - Complex(0.5, 0)) < 1e-15);
  CHECK(std::abs(parse_complex("1e-1+2E0i") - Complex(0.1, 2)) < 1e-15);
  CHECK_THROWS(parse_complex("abc"));
}

}  // TEST_SUITE
