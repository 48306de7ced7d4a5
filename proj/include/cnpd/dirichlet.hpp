#pragma once

#include "cnpd/exactmath.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>

namespace cnpd {

using Index = std::uint64_t;

// Coefficients a_1..a_N of a Dirichlet series sum a_n n^{-s}, truncated at
// `limit`. Stored sparsely; an absent index means a zero coefficient.
class DirichletCoefficients {
 public:
  explicit DirichletCoefficients(Index limit);

  static DirichletCoefficients delta(Index limit);  // the unit: a_1 = 1
  static DirichletCoefficients ones(Index limit);   // zeta(s) truncated

  Index limit() const noexcept { return limit_; }
  const std::map<Index, Rational>& terms() const noexcept { return terms_; }

  Rational at(Index n) const;
  // Setting a zero coefficient erases the entry.
  void set(Index n, const Rational& value);

  DirichletCoefficients truncated(Index limit) const;

  bool operator==(const DirichletCoefficients&) const = default;

 private:
  Index limit_;
  std::map<Index, Rational> terms_;
};

// Dirichlet convolution truncated at n_max; n_max must not exceed either limit.
DirichletCoefficients multiply(const DirichletCoefficients& a, const DirichletCoefficients& b, Index n_max);

// Dirichlet inverse truncated at n_max; requires a_1 != 0.
DirichletCoefficients invert(const DirichletCoefficients& a, Index n_max);

struct CnpVerdict {
  bool is_cnp_up_to_limit = false;
  std::optional<Index> witness;  // smallest n >= 2 with c_n > 0
  Index limit = 0;
};

// Kernel with weights w is CNP (up to the truncation) iff every coefficient
// c_n, n >= 2, of 1/w is non-positive.
CnpVerdict cnp_check(const DirichletCoefficients& w, Index n_max);

// d_m(n): ordered factorizations of n into m factors.
Integer ordered_factorization_count(unsigned long m, Index n);

struct ZetaFactorVerdict {
  bool holds_up_to_limit = false;
  std::optional<Index> witness;
  Index limit = 0;
};

// weights[j] is the weight attached to frequency j + 2; indices past the end
// count as zero. Checks sum_{m >= 2, m | n} b_{m-1} >= 1 for 2 <= n <= n_max.
ZetaFactorVerdict zeta_factor_condition(std::span<const Rational> weights, Index n_max);

struct HkNorm {
  bool infinite = false;
  Rational value;  // meaningful only when !infinite
};

// sum |a_n|^2 / w_n over the support of f.
HkNorm hk_norm(const DirichletCoefficients& f, const DirichletCoefficients& w);

}  // namespace cnpd
