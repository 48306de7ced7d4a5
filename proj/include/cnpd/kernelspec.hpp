#pragma once

#include "cnpd/dirichlet.hpp"
#include "cnpd/exactmath.hpp"
#include "cnpd/real.hpp"

#include <cstddef>
#include <vector>

namespace cnpd {

// Weight data b and frequency data n before the normalization constraint.
// Invariants once checked: same length d >= 1, b_j > 0, n_j >= 2 distinct.
struct RawSpec {
  std::vector<Rational> b;
  std::vector<Integer> n;

  std::size_t dimension() const noexcept { return n.size(); }
};

// Throws ValidationError naming the first violated clause.
void check_raw(const RawSpec& raw);

// A normalized finite CNP kernel 1 / (1 - sum b_j n_j^{-s-conj(u)}) with
// sum b_j = 1 exactly. Only obtainable through validate().
class KernelSpec {
 public:
  std::size_t dimension() const noexcept { return n_.size(); }
  const std::vector<Rational>& weights() const noexcept { return b_; }
  const std::vector<Integer>& frequencies() const noexcept { return n_; }
  const Rational& weight(std::size_t j) const { return b_.at(j); }
  const Integer& frequency(std::size_t j) const { return n_.at(j); }

  RawSpec raw() const { return {b_, n_}; }

  // The same kernel with coordinates relabeled: entry i of the result is
  // entry perm[i] of this spec (0-based).
  KernelSpec permuted(std::span<const std::size_t> perm) const;

  bool operator==(const KernelSpec&) const = default;

 private:
  friend KernelSpec validate(const RawSpec& raw);
  KernelSpec(std::vector<Rational> b, std::vector<Integer> n) : b_(std::move(b)), n_(std::move(n)) {}

  std::vector<Rational> b_;
  std::vector<Integer> n_;
};

// Validation clauses: "dimension", "frequency_range", "distinct_frequencies",
// "positive_weights", "weights_sum" (detail = 1 - sum b as a rational).
KernelSpec validate(const RawSpec& raw);

// Unique real rho with sum b_j n_j^{-rho} = 1, by bisection.
Real solve_rho(const RawSpec& raw, const Real& tol);

struct NormalizedWeights {
  Real rho;
  std::vector<Real> b;
  std::vector<Integer> n;
};

// b'_j = b_j n_j^{-rho}; sums to 1 within tol.
NormalizedWeights normalize(const RawSpec& raw, const Real& tol);

// Dirichlet coefficients of the kernel: the inverse of 1 - sum b_j n_j^{-s},
// truncated at n_max.
DirichletCoefficients weight_expansion(const KernelSpec& spec, Index n_max);

// Points of the right half-plane are plain complex numbers s with Re(s) > 0.
using HalfPlanePoint = Complex;

// (sqrt(b_j) n_j^{-s})_j, a point of the open unit ball.
ComplexVector f_eval(const KernelSpec& spec, const HalfPlanePoint& s);

// K(s, u) = 1 / (1 - sum b_j n_j^{-s-conj(u)}).
Complex kernel_eval(const KernelSpec& spec, const HalfPlanePoint& s, const HalfPlanePoint& u);

// sum b_j n_j^{-s-conj(u)}, i.e. <f(s), f(u)>.
Complex kernel_inner(const KernelSpec& spec, const HalfPlanePoint& s, const HalfPlanePoint& u);

}  // namespace cnpd
