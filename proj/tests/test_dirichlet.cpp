#include "cnpd/dirichlet.hpp"
#include "cnpd/errors.hpp"
#include "cnpd/kernelspec.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cnpd;

namespace {

DirichletCoefficients series(Index limit, std::initializer_list<std::pair<Index, Rational>> terms) {
  DirichletCoefficients c(limit);
  for (const auto& [n, v] : terms) c.set(n, v);
  return c;
}

DirichletCoefficients random_series(oracle::Gen& gen, Index limit, bool unit) {
  DirichletCoefficients c(limit);
  Rational a1 = 0;
  while (unit && a1 == 0) a1 = gen.rational();
  if (unit) c.set(1, a1);
  const long lo = unit ? 2 : 1;
  const long count = static_cast<long>(limit) >= lo ? gen.uniform(0, 12) : 0;
  for (long k = 0; k < count; ++k) {
    c.set(static_cast<Index>(gen.uniform(lo, static_cast<long>(limit))), gen.rational());
  }
  return c;
}

}  // namespace

TEST_CASE("coefficient storage") {
  DirichletCoefficients c(5);
  c.set(3, Rational(2));
  c.set(3, Rational(0));
  CHECK(c.terms().empty());
  CHECK_THROWS_AS(c.set(6, Rational(1)), TruncationError);
  CHECK_THROWS_AS(c.set(0, Rational(1)), TruncationError);
  CHECK_THROWS_AS(DirichletCoefficients(0), DomainError);
  CHECK_THROWS_AS(c.truncated(6), TruncationError);
}

TEST_CASE("multiply fixtures") {
  const auto b = series(8, {{1, Rational(3)}, {4, Rational(-1, 2)}, {7, Rational(5)}});
  CHECK(multiply(DirichletCoefficients::delta(8), b, 8) == b);
  CHECK(multiply(DirichletCoefficients::delta(8), b, 6) == b.truncated(6));

  const auto p = multiply(series(6, {{2, Rational(1)}}), series(6, {{3, Rational(1)}}), 6);
  CHECK(p == series(6, {{6, Rational(1)}}));

  const auto d2 = multiply(DirichletCoefficients::ones(6), DirichletCoefficients::ones(6), 6);
  const long expected[] = {1, 2, 2, 3, 2, 4};
  for (Index n = 1; n <= 6; ++n) CHECK(d2.at(n) == expected[n - 1]);

  CHECK_THROWS_AS(multiply(DirichletCoefficients::ones(5), DirichletCoefficients::ones(6), 6), TruncationError);
}

TEST_CASE("invert fixtures") {
  const auto mu = invert(DirichletCoefficients::ones(10), 10);
  const long expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  for (Index n = 1; n <= 10; ++n) CHECK(mu.at(n) == expected[n - 1]);
  CHECK(invert(DirichletCoefficients::delta(7), 7) == DirichletCoefficients::delta(7));

  const auto g = invert(series(6, {{1, Rational(1)}, {2, Rational(-1, 2)}, {3, Rational(-1, 2)}}), 6);
  const Rational geo[] = {Rational(1), Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(0), Rational(1, 2)};
  for (Index n = 1; n <= 6; ++n) CHECK(g.at(n) == geo[n - 1]);

  CHECK_THROWS_AS(invert(series(4, {{2, Rational(1)}}), 4), DomainError);
  CHECK_THROWS_AS(invert(DirichletCoefficients::ones(4), 5), TruncationError);
}

TEST_CASE("inverse of zeta is the Moebius function") {
  const auto mu = invert(DirichletCoefficients::ones(500), 500);
  for (Index n = 1; n <= 500; ++n) CHECK(mu.at(n) == oracle::mobius(n));
}

TEST_CASE("invert is a two-sided inverse and an involution") {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Index limit = static_cast<Index>(gen.uniform(1, 200));
    const auto a = random_series(gen, limit, true);
    const auto inv = invert(a, limit);
    CHECK(multiply(a, inv, limit) == DirichletCoefficients::delta(limit));
    CHECK(multiply(inv, a, limit) == DirichletCoefficients::delta(limit));
    CHECK(invert(inv, limit) == a);
  }
}

TEST_CASE("multiply is commutative and associative") {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Index limit = static_cast<Index>(gen.uniform(1, 120));
    const auto a = random_series(gen, limit, false);
    const auto b = random_series(gen, limit, false);
    const auto c = random_series(gen, limit, false);
    CHECK(multiply(a, b, limit) == multiply(b, a, limit));
    CHECK(multiply(multiply(a, b, limit), c, limit) == multiply(a, multiply(b, c, limit), limit));
  }
}

TEST_CASE("ordered factorization counts") {
  CHECK(ordered_factorization_count(2, 6) == 4);
  CHECK(ordered_factorization_count(3, 4) == 6);
  for (Index n = 1; n <= 60; ++n) CHECK(ordered_factorization_count(1, n) == 1);
  CHECK_THROWS_AS(ordered_factorization_count(0, 5), DomainError);
  CHECK_THROWS_AS(ordered_factorization_count(2, 0), DomainError);

  for (unsigned long m = 1; m <= 4; ++m) {
    DirichletCoefficients power = DirichletCoefficients::ones(60);
    for (unsigned long k = 1; k < m; ++k) power = multiply(power, DirichletCoefficients::ones(60), 60);
    for (Index n = 1; n <= 60; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(ordered_factorization_count(m, n) == power.at(n));
      CHECK(ordered_factorization_count(m, n) == Integer(static_cast<unsigned long>(oracle::ordered_factorizations(
                                                      static_cast<unsigned>(m), n))));
    }
  }
}

TEST_CASE("cnp_check") {
  const auto hardy = cnp_check(DirichletCoefficients::ones(10), 10);
  CHECK_FALSE(hardy.is_cnp_up_to_limit);
  REQUIRE(hardy.witness);
  CHECK(*hardy.witness == 6);

  const KernelSpec spec = validate({{Rational(1, 2), Rational(1, 2)}, {Integer(2), Integer(3)}});
  const auto w = weight_expansion(spec, 50);
  const auto v = cnp_check(w, 50);
  CHECK(v.is_cnp_up_to_limit);
  CHECK_FALSE(v.witness);
  CHECK(invert(w, 50) == [] {
    DirichletCoefficients c(50);
    c.set(1, Rational(1));
    c.set(2, Rational(-1, 2));
    c.set(3, Rational(-1, 2));
    return c;
  }());

  CHECK(cnp_check(DirichletCoefficients::delta(9), 9).is_cnp_up_to_limit);
  CHECK_THROWS_AS(cnp_check(series(4, {{2, Rational(1)}}), 4), DomainError);
}

TEST_CASE("weight expansions of valid kernels always pass the sign test") {
  oracle::Gen gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.uniform(1, 5));
    const auto n = gen.frequencies(d, 60);
    const KernelSpec spec = validate({gen.weights(d), oracle::to_integers(n)});
    const Index limit = static_cast<Index>(gen.uniform(20, 300));
    CHECK(cnp_check(weight_expansion(spec, limit), limit).is_cnp_up_to_limit);
  }
}

TEST_CASE("zeta factor condition") {
  std::vector<Rational> ones(120, Rational(1));
  CHECK(zeta_factor_condition(ones, 100).holds_up_to_limit);

  std::vector<Rational> d2;
  for (Index j = 1; j <= 120; ++j) d2.emplace_back(ordered_factorization_count(2, j + 1));
  CHECK(zeta_factor_condition(d2, 100).holds_up_to_limit);

  std::vector<Rational> halves(12, Rational(1, 2));
  const auto v = zeta_factor_condition(halves, 10);
  CHECK_FALSE(v.holds_up_to_limit);
  REQUIRE(v.witness);
  CHECK(*v.witness == 2);

  // Empty weight list: n = 2 already fails.
  CHECK(zeta_factor_condition(std::vector<Rational>{}, 5).witness == std::optional<Index>(2));
  CHECK(zeta_factor_condition(std::vector<Rational>{}, 1).holds_up_to_limit);
}

TEST_CASE("hk_norm") {
  const auto f = series(3, {{2, Rational(1)}, {3, Rational(2)}});
  const auto w = series(3, {{1, Rational(1)}, {2, Rational(1, 2)}, {3, Rational(1)}});
  const auto norm = hk_norm(f, w);
  CHECK_FALSE(norm.infinite);
  CHECK(norm.value == 6);

  CHECK(hk_norm(DirichletCoefficients(3), w).value == 0);

  const auto inf = hk_norm(series(3, {{2, Rational(1)}}), series(3, {{1, Rational(1)}}));
  CHECK(inf.infinite);

  CHECK_THROWS_AS(hk_norm(series(5, {{5, Rational(1)}}), w), TruncationError);
}
