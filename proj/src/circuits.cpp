#include "cnpd/circuits.hpp"

#include "cnpd/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

namespace cnpd {

ExponentMatrix exponent_matrix(std::span<const Integer> n) {
  std::set<Integer> seen;
  for (const auto& v : n) {
    if (v < 2) throw DomainError("frequency " + v.get_str() + " is below 2");
    if (!seen.insert(v).second) throw DomainError("frequency " + v.get_str() + " repeated");
  }
  std::vector<PrimeFactorization> factors;
  std::set<Integer> primes;
  for (const auto& v : n) {
    factors.push_back(factorize(v));
    for (const auto& pp : factors.back()) primes.insert(pp.prime);
  }
  ExponentMatrix out;
  out.primes.assign(primes.begin(), primes.end());
  out.matrix = IntMatrix(n.size(), out.primes.size());
  for (std::size_t j = 0; j < n.size(); ++j) {
    for (const auto& [p, e] : factors[j]) {
      auto col = std::lower_bound(out.primes.begin(), out.primes.end(), p) - out.primes.begin();
      out.matrix(j, static_cast<std::size_t>(col)) = e;
    }
  }
  return out;
}

const Integer& Circuit::beta_of(std::size_t index) const {
  auto it = std::lower_bound(J.begin(), J.end(), index);
  if (it == J.end() || *it != index) throw DomainError("index not in circuit");
  return beta[static_cast<std::size_t>(it - J.begin())];
}

bool log_independent(std::span<const Integer> n) {
  const ExponentMatrix em = exponent_matrix(n);
  return rational_rank(em.matrix) == n.size();
}

namespace {

IndexSet indices_of(std::uint64_t mask) {
  IndexSet out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

Integer side_product(std::span<const Integer> n, const Circuit& c, const IndexSet& side) {
  Integer prod = 1;
  for (std::size_t i : side) prod *= ipow(n[i], c.beta_of(i).get_ui());
  return prod;
}

Circuit decompose_rows(std::span<const Integer> n, const IntMatrix& rows, const IndexSet& J) {
  auto kernel = integer_kernel_basis(rows);
  if (kernel.empty()) throw DomainError("index set is not dependent");
  if (kernel.size() > 1) throw DomainError("index set is not a circuit: a proper subset is dependent");
  const auto& v = kernel.front();
  Circuit c;
  c.J = J;
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (v[k] == 0) throw DomainError("index set is not a circuit: a proper subset is dependent");
    c.beta.push_back(abs(v[k]));
    (v[k] > 0 ? c.J1 : c.J2).push_back(J[k]);
  }
  if (side_product(n, c, c.J1) != side_product(n, c, c.J2)) {
    throw DomainError("circuit product identity failed");
  }
  return c;
}

}  // namespace

std::vector<Circuit> enumerate_circuits(std::span<const Integer> n, std::size_t max_d) {
  const std::size_t d = n.size();
  if (d > max_d || d > 62) {
    throw DomainError("dimension " + std::to_string(d) + " exceeds circuit enumeration bound " +
                      std::to_string(std::min<std::size_t>(max_d, 62)));
  }
  const ExponentMatrix em = exponent_matrix(n);
  const std::size_t rank = rational_rank(em.matrix);
  std::vector<Circuit> out;
  if (rank == d) return out;

  std::vector<std::uint64_t> found;
  const std::uint64_t limit = std::uint64_t{1} << d;
  for (std::size_t size = 2; size <= std::min(d, rank + 1); ++size) {
    std::vector<Circuit> layer;
    // Gosper's hack walks the size-element subsets in increasing mask order.
    for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask < limit;) {
      bool contains_circuit = std::any_of(found.begin(), found.end(), [&](std::uint64_t c) { return (mask & c) == c; });
      if (!contains_circuit) {
        const IndexSet J = indices_of(mask);
        const IntMatrix rows = em.matrix.select_rows(J);
        if (rational_rank(rows) < size) layer.push_back(decompose_rows(n, rows, J));
      }
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    std::sort(layer.begin(), layer.end(), [](const Circuit& a, const Circuit& b) { return a.J < b.J; });
    for (auto& c : layer) {
      std::uint64_t m = 0;
      for (std::size_t i : c.J) m |= std::uint64_t{1} << i;
      found.push_back(m);
      out.push_back(std::move(c));
    }
  }
  return out;
}

Circuit circuit_decompose(std::span<const Integer> n, const IndexSet& J) {
  if (J.size() < 2) throw DomainError("a circuit needs at least two indices");
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (J[k] >= n.size()) throw DomainError("index out of range");
    if (k > 0 && J[k] <= J[k - 1]) throw DomainError("index set must be sorted and distinct");
  }
  const ExponentMatrix em = exponent_matrix(n);
  return decompose_rows(n, em.matrix.select_rows(J), J);
}

std::map<std::size_t, Rational> fundamental_relation(std::span<const Integer> n, const IndexSet& basis,
                                                     std::size_t k) {
  if (k >= n.size()) throw DomainError("index out of range");
  for (std::size_t i : basis) {
    if (i >= n.size()) throw DomainError("index out of range");
  }
  const ExponentMatrix em = exponent_matrix(n);
  const auto x = solve_row_combination(em.matrix.select_rows(basis), em.matrix.row(k));
  if (!x) throw DomainError("frequency " + n[k].get_str() + " has no relation over the given basis");

  std::map<std::size_t, Rational> out;
  Integer den = 1;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if ((*x)[t] == 0) continue;
    out.emplace(basis[t], (*x)[t]);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), (*x)[t].get_den_mpz_t());
  }
  // n_k^den = prod n_i^{r_i den}, negative exponents moved to the left.
  Integer lhs = ipow(n[k], den.get_ui());
  Integer rhs = 1;
  for (const auto& [i, r] : out) {
    Integer e = r.get_num() * (den / r.get_den());
    if (e > 0) {
      rhs *= ipow(n[i], e.get_ui());
    } else {
      lhs *= ipow(n[i], Integer(-e).get_ui());
    }
  }
  if (lhs != rhs) throw DomainError("fundamental relation failed verification");
  return out;
}

}  // namespace cnpd
