#include "cnpd/dirichlet.hpp"

#include "cnpd/errors.hpp"

#include <string>
#include <vector>

namespace cnpd {

DirichletCoefficients::DirichletCoefficients(Index limit) : limit_(limit) {
  if (limit < 1) throw DomainError("Dirichlet truncation limit must be >= 1");
}

DirichletCoefficients DirichletCoefficients::delta(Index limit) {
  DirichletCoefficients d(limit);
  d.set(1, Rational(1));
  return d;
}

DirichletCoefficients DirichletCoefficients::ones(Index limit) {
  DirichletCoefficients d(limit);
  for (Index n = 1; n <= limit; ++n) d.set(n, Rational(1));
  return d;
}

Rational DirichletCoefficients::at(Index n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DirichletCoefficients::set(Index n, const Rational& value) {
  if (n < 1 || n > limit_) {
    throw TruncationError("index " + std::to_string(n) + " outside [1, " + std::to_string(limit_) + "]");
  }
  if (value == 0) {
    terms_.erase(n);
  } else {
    terms_[n] = value;
  }
}

DirichletCoefficients DirichletCoefficients::truncated(Index limit) const {
  if (limit > limit_) {
    throw TruncationError("cannot extend a series truncated at " + std::to_string(limit_));
  }
  DirichletCoefficients out(limit);
  for (const auto& [n, v] : terms_) {
    if (n > limit) break;
    out.terms_.emplace(n, v);
  }
  return out;
}

namespace {

void require_within(const DirichletCoefficients& a, Index n_max, const char* what) {
  if (n_max > a.limit()) {
    throw TruncationError(std::string(what) + ": limit " + std::to_string(n_max) +
                          " exceeds series truncation " + std::to_string(a.limit()));
  }
}

DirichletCoefficients from_dense(const std::vector<Rational>& dense, Index n_max) {
  DirichletCoefficients out(n_max);
  for (Index n = 1; n <= n_max; ++n) {
    if (dense[n] != 0) out.set(n, dense[n]);
  }
  return out;
}

}  // namespace

DirichletCoefficients multiply(const DirichletCoefficients& a, const DirichletCoefficients& b, Index n_max) {
  require_within(a, n_max, "multiply");
  require_within(b, n_max, "multiply");
  std::vector<Rational> acc(n_max + 1);
  for (const auto& [m, am] : a.terms()) {
    if (m > n_max) break;
    const Index cap = n_max / m;
    for (const auto& [k, bk] : b.terms()) {
      if (k > cap) break;
      acc[m * k] += am * bk;
    }
  }
  return from_dense(acc, n_max);
}

DirichletCoefficients invert(const DirichletCoefficients& a, Index n_max) {
  require_within(a, n_max, "invert");
  const Rational a1 = a.at(1);
  if (a1 == 0) {
    throw DomainError("series with a_1 = 0 has no Dirichlet inverse");
  }
  const Rational inv_a1 = 1 / a1;
  std::vector<std::pair<Index, Rational>> tail;
  for (const auto& [m, am] : a.terms()) {
    if (m > 1 && m <= n_max) tail.emplace_back(m, am);
  }
  std::vector<Rational> c(n_max + 1);
  c[1] = inv_a1;
  Rational sum;
  for (Index n = 2; n <= n_max; ++n) {
    sum = 0;
    for (const auto& [m, am] : tail) {
      if (m > n) break;
      if (n % m == 0 && c[n / m] != 0) sum += am * c[n / m];
    }
    c[n] = -inv_a1 * sum;
  }
  return from_dense(c, n_max);
}

CnpVerdict cnp_check(const DirichletCoefficients& w, Index n_max) {
  const DirichletCoefficients c = invert(w, n_max);
  CnpVerdict verdict{true, std::nullopt, n_max};
  for (const auto& [n, cn] : c.terms()) {
    if (n >= 2 && cn > 0) {
      verdict.is_cnp_up_to_limit = false;
      verdict.witness = n;
      break;
    }
  }
  return verdict;
}

Integer ordered_factorization_count(unsigned long m, Index n) {
  if (m < 1 || n < 1) {
    throw DomainError("ordered_factorization_count requires m >= 1 and n >= 1");
  }
  if (n == 1 || m == 1) return Integer(1);
  Integer count = 1;
  Integer binom;
  for (const auto& [p, e] : factorize(Integer(static_cast<unsigned long>(n)))) {
    mpz_bin_uiui(binom.get_mpz_t(), e + m - 1, m - 1);
    count *= binom;
  }
  return count;
}

ZetaFactorVerdict zeta_factor_condition(std::span<const Rational> weights, Index n_max) {
  ZetaFactorVerdict verdict{true, std::nullopt, n_max};
  Rational sum;
  for (Index n = 2; n <= n_max; ++n) {
    sum = 0;
    for (Index m : divisors(n)) {
      if (m < 2) continue;
      const Index slot = m - 2;  // b_{m-1} in 1-based weight numbering
      if (slot < weights.size()) sum += weights[slot];
    }
    if (sum < 1) {
      verdict.holds_up_to_limit = false;
      verdict.witness = n;
      break;
    }
  }
  return verdict;
}

HkNorm hk_norm(const DirichletCoefficients& f, const DirichletCoefficients& w) {
  HkNorm out;
  for (const auto& [n, an] : f.terms()) {
    if (n > w.limit()) {
      throw TruncationError("coefficient index " + std::to_string(n) + " beyond weight truncation");
    }
    const Rational wn = w.at(n);
    if (wn == 0) {
      out.infinite = true;
      out.value = 0;
      return out;
    }
    out.value += an * an / wn;
  }
  return out;
}

}  // namespace cnpd
