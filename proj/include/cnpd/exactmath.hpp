#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cnpd {

using Integer = mpz_class;
// mpq_class keeps itself canonical under arithmetic; constructors that take a
// raw numerator/denominator pair must go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q" and finite decimals such as "-0.125"; the result is exact.
// Throws ValidationError (clause "rational_syntax") on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, unsigned long exp);

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// Primes strictly increasing, exponents >= 1.
using PrimeFactorization = std::vector<PrimePower>;

// Trial division by primes below 10^6, then Brent/Pollard rho on the cofactor.
PrimeFactorization factorize(const Integer& n);
Integer expand(const PrimeFactorization& f);

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  // Submatrix made of the listed rows, in the order given.
  IntMatrix select_rows(std::span<const std::size_t> which) const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rational_rank(const IntMatrix& m);

// Basis of the left kernel {v : v^T * m = 0}. Each vector has integer
// entries with gcd 1 and a positive first nonzero entry. The number of
// vectors is rows - rank.
std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& m);

// Coefficients x with sum_i x_i * rows(i) = target, where rows are required
// to be linearly independent. Empty optional if target is outside the row span.
std::optional<std::vector<Rational>> solve_row_combination(const IntMatrix& rows,
                                                          std::span<const Integer> target);

// Scales v in place to gcd 1 with a positive first nonzero entry.
void make_primitive(std::vector<Integer>& v);

std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace cnpd
