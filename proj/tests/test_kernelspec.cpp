#include "cnpd/errors.hpp"
#include "cnpd/kernelspec.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <complex>

using namespace cnpd;
namespace mp = boost::multiprecision;

namespace {

RawSpec raw(std::vector<Rational> b, std::vector<long> n) {
  RawSpec r{std::move(b), {}};
  for (long v : n) r.n.emplace_back(v);
  return r;
}

std::string clause_of(const RawSpec& r) {
  try {
    validate(r);
  } catch (const ValidationError& e) {
    return e.clause();
  }
  return "";
}

Real g(const RawSpec& r, const Real& sigma) {
  Real sum = 0;
  for (std::size_t j = 0; j < r.n.size(); ++j) sum += to_real(r.b[j]) * mp::pow(to_real(r.n[j]), -sigma);
  return sum;
}

bool close(const Real& a, double b, double tol) { return mp::abs(a - Real(b)) < tol; }

}  // namespace

TEST_CASE("validate") {
  const Rational third(1, 3);
  const KernelSpec s = validate(raw({third, third, third}, {2, 3, 6}));
  CHECK(s.dimension() == 3);
  CHECK(s.frequency(2) == 6);

  CHECK(clause_of(raw({Rational(1, 2), Rational(1, 2)}, {2, 2})) == "distinct_frequencies");
  CHECK(clause_of(raw({Rational(1)}, {1})) == "frequency_range");
  CHECK(clause_of(raw({Rational(3, 2), Rational(-1, 2)}, {2, 3})) == "positive_weights");
  CHECK(clause_of(raw({Rational(1, 2)}, {2, 3})) == "dimension");
  CHECK(clause_of(raw({}, {})) == "dimension");

  try {
    validate(raw({Rational(1, 2), Rational(1, 4)}, {2, 3}));
    FAIL("expected weights_sum");
  } catch (const ValidationError& e) {
    CHECK(e.clause() == "weights_sum");
    CHECK(e.detail() == "1/4");
  }
}

TEST_CASE("permuted relabels coordinates") {
  const KernelSpec s = validate(raw({Rational(1, 2), Rational(1, 3), Rational(1, 6)}, {2, 3, 12}));
  const std::vector<std::size_t> perm{2, 0, 1};
  const KernelSpec p = s.permuted(perm);
  CHECK(p.frequency(0) == 12);
  CHECK(p.weight(1) == Rational(1, 2));
  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_AS(s.permuted(bad), DomainError);
}

TEST_CASE("solve_rho fixtures") {
  CHECK(solve_rho(raw({Rational(1, 2), Rational(1, 2)}, {2, 3}), Real("1e-20")) == 0);

  const Real expected = mp::log((mp::sqrt(Real(5)) + 1) / 2) / mp::log(Real(2));
  const Real rho = solve_rho(raw({Rational(1), Rational(1)}, {2, 4}), Real("1e-25"));
  CHECK(mp::abs(rho - expected) < Real("1e-24"));
  CHECK(close(rho, 0.694242, 1e-6));

  CHECK(mp::abs(solve_rho(raw({Rational(2)}, {2}), Real("1e-25")) - 1) < Real("1e-24"));
  // Sum below one: rho is negative.
  const Real neg = solve_rho(raw({Rational(1, 4)}, {2}), Real("1e-25"));
  CHECK(mp::abs(neg + 2) < Real("1e-24"));

  CHECK_THROWS_AS(solve_rho(raw({Rational(1)}, {2}), Real(0)), DomainError);
  CHECK_THROWS_AS(solve_rho(raw({Rational(1)}, {2}), Real(-1)), DomainError);
}

TEST_CASE("solve_rho brackets the root") {
  oracle::Gen gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.uniform(1, 5));
    RawSpec r;
    for (auto v : gen.frequencies(d, 500)) r.n.emplace_back(static_cast<unsigned long>(v));
    for (std::size_t j = 0; j < d; ++j) r.b.push_back(make_rational(Integer(gen.uniform(1, 400)), Integer(gen.uniform(1, 50))));
    const Real tol("1e-12");
    const Real rho = solve_rho(r, tol);
    CHECK(mp::abs(g(r, rho) - 1) < tol);
    CHECK(g(r, rho - tol) > 1);
    CHECK(g(r, rho + tol) < 1);
  }
}

TEST_CASE("normalize") {
  const auto nw = normalize(raw({Rational(1), Rational(1)}, {2, 4}), Real("1e-25"));
  const Real x = (mp::sqrt(Real(5)) - 1) / 2;
  CHECK(mp::abs(nw.b[0] - x) < Real("1e-20"));
  CHECK(mp::abs(nw.b[1] - x * x) < Real("1e-20"));
  CHECK(mp::abs(nw.b[0] + nw.b[1] - 1) < Real("1e-20"));

  const auto same = normalize(raw({Rational(1, 3), Rational(2, 3)}, {5, 7}), Real("1e-25"));
  CHECK(same.rho == 0);
  CHECK(same.b[0] == to_real(Rational(1, 3)));

  const auto one = normalize(raw({Rational(2)}, {2}), Real("1e-25"));
  CHECK(mp::abs(one.b[0] - 1) < Real("1e-20"));
}

TEST_CASE("weight_expansion fixtures") {
  const KernelSpec s = validate(raw({Rational(1, 2), Rational(1, 2)}, {2, 3}));
  const auto w = weight_expansion(s, 6);
  const Rational geo[] = {Rational(1), Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(0), Rational(1, 2)};
  for (Index n = 1; n <= 6; ++n) CHECK(w.at(n) == geo[n - 1]);

  const auto powers = weight_expansion(validate(raw({Rational(1)}, {2})), 8);
  for (Index n = 1; n <= 8; ++n) CHECK(powers.at(n) == ((n & (n - 1)) == 0 ? 1 : 0));

  // Frequencies beyond the truncation contribute nothing below it.
  const auto big = weight_expansion(validate(raw({Rational(1, 2), Rational(1, 2)}, {2, 97})), 10);
  CHECK(big.at(8) == Rational(1, 8));
}

TEST_CASE("weight_expansion matches the ordered-word expansion") {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.uniform(1, 4));
    const auto n = gen.frequencies(d, 30);
    const auto b = gen.weights(d);
    const KernelSpec spec = validate({b, oracle::to_integers(n)});
    const Index limit = 150;
    const auto w = weight_expansion(spec, limit);
    const auto ref = oracle::geometric_expansion(b, n, limit);
    for (Index k = 1; k <= limit; ++k) {
      const Rational expected = ref.count(k) ? ref.at(k) : Rational(0);
      CHECK(w.at(k) == expected);
      CHECK(w.at(k) >= 0);
    }
    CHECK(w.at(1) == 1);
    // Inverting recovers 1 - sum b_j n_j^{-s}.
    const auto back = invert(w, limit);
    for (Index k = 2; k <= limit; ++k) {
      Rational expected = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (n[j] == k) expected = -b[j];
      }
      CHECK(back.at(k) == expected);
    }
  }
}

TEST_CASE("f_eval and kernel_eval fixtures") {
  const Rational third(1, 3);
  const KernelSpec s = validate(raw({third, third, third}, {2, 3, 6}));
  const auto f = f_eval(s, Complex(Real(1)));
  CHECK(close(f[0].re, 0.288675, 1e-6));
  CHECK(close(f[1].re, 0.192450, 1e-6));
  CHECK(close(f[2].re, 0.096225, 1e-6));
  const Real root = mp::sqrt(Real(1) / 3);
  CHECK(mp::abs(f[0].re - root / 2) < Real("1e-35"));

  const auto far = f_eval(s, Complex(Real(200)));
  CHECK(euclidean_norm(far) < Real("1e-50"));

  const auto half = f_eval(validate(raw({Rational(1)}, {2})), Complex(Real(1)));
  CHECK(mp::abs(half[0].re - Real("0.5")) < Real("1e-35"));

  const KernelSpec s23 = validate(raw({Rational(1, 2), Rational(1, 2)}, {2, 3}));
  const Complex k = kernel_eval(s23, Complex(Real(1)), Complex(Real(1)));
  CHECK(mp::abs(k.re - to_real(Rational(72, 59))) < Real("1e-35"));
  CHECK(mp::abs(k.im) < Real("1e-35"));
  const Complex kinf = kernel_eval(s23, Complex(Real(300)), Complex(Real(300)));
  CHECK(mp::abs(kinf.re - 1) < Real("1e-60"));

  CHECK_THROWS_AS(f_eval(s, Complex(Real(0))), DomainError);
  CHECK_THROWS_AS(kernel_eval(s, Complex(Real(1)), Complex(Real(-1))), DomainError);
}

TEST_CASE("kernel agrees with 1/(1 - <f(s), f(u)>) and its geometric partial sums") {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.uniform(1, 5));
    const KernelSpec spec = validate({gen.weights(d), oracle::to_integers(gen.frequencies(d, 100))});
    const Complex s(Real(gen.real(0.5, 4)), Real(gen.real(-10, 10)));
    const Complex u(Real(gen.real(0.5, 4)), Real(gen.real(-10, 10)));
    const auto fs = f_eval(spec, s), fu = f_eval(spec, u);
    CHECK(euclidean_norm(fs) < 1);
    Complex inner;
    for (std::size_t j = 0; j < d; ++j) inner += fs[j] * conj(fu[j]);
    const Complex k = kernel_eval(spec, s, u);
    const Complex viaf = Complex(Real(1)) / (Complex(Real(1)) - inner);
    CHECK(abs(k - viaf) < Real("1e-30"));

    // Partial sums in plain long double arithmetic.
    std::complex<long double> x = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const long double b = spec.weight(j).get_d();
      const long double ln = std::log(static_cast<long double>(spec.frequency(j).get_d()));
      const std::complex<long double> w(static_cast<long double>(s.re) + static_cast<long double>(u.re),
                                        static_cast<long double>(s.im) - static_cast<long double>(u.im));
      x += b * std::exp(-w * ln);
    }
    std::complex<long double> partial = 0, term = 1;
    for (int m = 0; m < 60; ++m, term *= x) partial += term;
    if (std::abs(x) < 0.6L) {
      CHECK(std::abs(partial - std::complex<long double>(static_cast<long double>(k.re), static_cast<long double>(k.im))) <
            1e-10L);
    }

    const Complex kss = kernel_eval(spec, s, s);
    CHECK(kss.re >= 1);
    CHECK(mp::abs(kss.im) < Real("1e-30"));
  }
}
