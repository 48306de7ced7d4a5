#pragma once

#include "cnpd/dirichlet.hpp"
#include "cnpd/kernelspec.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cnpd {

// Square complex matrix, row-major.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::size_t size) : size_(size), data_(size * size) {}

  std::size_t size() const noexcept { return size_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  Real max_abs() const;

 private:
  std::size_t size_ = 0;
  std::vector<Complex> data_;
};

enum class GramMode { kernel, one_minus_inv };

// kernel: K(s_i, s_j); one_minus_inv: 1 - 1/K(s_i, s_j) = sum b n^{-s_i - conj(s_j)}.
GramMatrix gram_matrix(const KernelSpec& spec, std::span<const HalfPlanePoint> points, GramMode mode);

// Eigenvalues of a Hermitian matrix, ascending. Throws DomainError if the
// matrix is not Hermitian within 1e-14 (relative to max(1, max |entry|)).
std::vector<Real> hermitian_eigenvalues(const GramMatrix& m);

struct PsdReport {
  bool is_psd = true;
  std::optional<Real> min_eigenvalue;  // empty for the 0 x 0 matrix
};

constexpr double kDefaultPsdTolerance = 1e-8;

// is_psd iff min eigenvalue >= -tol * max(1, max |entry|).
PsdReport psd_check(const GramMatrix& m, const Real& tol);

// |sum a_n conj(w_n n^{-conj(u)}) / w_n - sum a_n n^{-u}| with
// w = weight_expansion(spec, n_max).
Real reproducing_check(const KernelSpec& spec, const DirichletCoefficients& f, const HalfPlanePoint& u,
                       Index n_max);

}  // namespace cnpd
