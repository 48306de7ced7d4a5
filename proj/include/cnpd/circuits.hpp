#pragma once

#include "cnpd/exactmath.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace cnpd {

// Row j is the exponent vector of n_j over `primes` (every prime dividing
// some n_j, increasing).
struct ExponentMatrix {
  std::vector<Integer> primes;
  IntMatrix matrix;
};

// Throws DomainError unless every n_j >= 2 and the n_j are distinct.
ExponentMatrix exponent_matrix(std::span<const Integer> n);

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based

// A minimal dependent index set J with prod_{J1} n^beta = prod_{J2} n^beta.
// beta[k] belongs to J[k]; J1 holds min(J).
struct Circuit {
  IndexSet J;
  std::vector<Integer> beta;
  IndexSet J1;
  IndexSet J2;

  const Integer& beta_of(std::size_t index) const;

  bool operator==(const Circuit&) const = default;
};

bool log_independent(std::span<const Integer> n);

constexpr std::size_t kDefaultCircuitDimensionBound = 20;

// All circuits, ordered by (|J|, J lexicographically).
std::vector<Circuit> enumerate_circuits(std::span<const Integer> n,
                                        std::size_t max_d = kDefaultCircuitDimensionBound);

// Throws DomainError if J is independent or has a dependent proper subset.
Circuit circuit_decompose(std::span<const Integer> n, const IndexSet& J);

// r with n_k = prod_{i in basis} n_i^{r_i}; only nonzero r_i are listed.
// Throws DomainError if the basis rows are dependent or ln n_k is outside
// their span.
std::map<std::size_t, Rational> fundamental_relation(std::span<const Integer> n, const IndexSet& basis,
                                                     std::size_t k);

}  // namespace cnpd
