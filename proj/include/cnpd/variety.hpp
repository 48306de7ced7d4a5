#pragma once

#include "cnpd/circuits.hpp"
#include "cnpd/kernelspec.hpp"

#include <optional>
#include <vector>

namespace cnpd {

// q_J(z) = sqrt(Asq) prod_{J2} z^beta - sqrt(Bsq) prod_{J1} z^beta, kept
// through the squared coefficients Asq = prod_{J1} b^beta, Bsq = prod_{J2} b^beta.
struct PolyRelation {
  Circuit circuit;
  Rational Asq;
  Rational Bsq;
};

struct VarietyPresentation {
  std::size_t d = 0;
  std::vector<PolyRelation> relations;
  bool is_full_ball = true;
};

VarietyPresentation build_variety(const KernelSpec& spec);

struct GaussianRational {
  Rational re;
  Rational im;

  bool operator==(const GaussianRational&) const = default;
};

inline GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
inline Rational norm(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

using GaussianPoint = std::vector<GaussianRational>;

Complex to_complex(const GaussianRational& z);
ComplexVector to_complex(const GaussianPoint& z);

bool member_exact(const VarietyPresentation& v, const GaussianPoint& z);

constexpr double kDefaultMemberTolerance = 1e-10;

Complex relation_value(const PolyRelation& q, const ComplexVector& z);
bool member_numeric(const VarietyPresentation& v, const ComplexVector& z, const Real& tol);

constexpr unsigned kDefaultBranchSearch = 64;

// Parameter s with f(s) = z within tol, solved from the first coordinate.
// Branches of the logarithm are tried in the order 0, 1, -1, 2, -2, ...
// up to max_branch. Throws DomainError for z = 0.
std::optional<Complex> invert_point(const KernelSpec& spec, const ComplexVector& z, const Real& tol,
                                    unsigned max_branch = kDefaultBranchSearch);

struct AffineRankReport {
  std::size_t rank = 0;
  std::vector<Real> singular_values;  // decreasing
  Real cutoff;                        // 1e-10 * largest singular value
  Real gap;                           // smallest singular value above cutoff, divided by cutoff
};

// Numerical rank of the matrix with rows f(s_k), s_k = 1 + 17.3 k i,
// k = 0 .. sample_count - 1.
AffineRankReport affine_rank(const KernelSpec& spec, std::size_t sample_count);

}  // namespace cnpd
