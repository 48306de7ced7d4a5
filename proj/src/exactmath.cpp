#include "cnpd/exactmath.hpp"

#include "cnpd/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace cnpd {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw DomainError("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw ValidationError("rational_syntax", "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    Integer d(std::string(den), 10);
    if (d == 0) throw ValidationError("rational_syntax", "zero denominator in '" + std::string(text) + "'");
    q = make_rational(Integer(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_rational(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad_rational(text);
    std::string digits = std::string(whole) + std::string(frac);
    q = make_rational(Integer(digits, 10), ipow(Integer(10), frac.size()));
  } else {
    if (!all_digits(s)) bad_rational(text);
    q = Rational(Integer(std::string(s), 10));
  }
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational rpow(const Rational& base, unsigned long exp) {
  return make_rational(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
}

namespace {

constexpr unsigned long kTrialBound = 1'000'000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle-finding variant of Pollard rho with f(x) = x^2 + c.
// Returns a divisor of n, possibly n itself.
Integer brent_rho(const Integer& n, unsigned long c) {
  auto step = [&](const Integer& v) -> Integer {
    Integer out = v * v + c;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
    return out;
  };
  const unsigned long batch = 128;
  Integer y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    for (unsigned long k = 0; k < r && g == 1; k += batch) {
      ys = y;
      for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
        y = step(y);
        Integer diff = abs(x - y);
        q = q * diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = step(ys);
      Integer diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split_large(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out.push_back(n);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Integer g = brent_rho(n, c);
    if (g != n) {
      split_large(g, out);
      split_large(Integer(n / g), out);
      return;
    }
  }
}

}  // namespace

PrimeFactorization factorize(const Integer& n) {
  if (n < 2) {
    throw DomainError("factorize requires n >= 2, got " + n.get_str());
  }
  PrimeFactorization out;
  Integer rest = n;
  for (unsigned long p : small_primes()) {
    if (Integer(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    out.push_back({Integer(p), e});
  }
  if (rest == 1) return out;

  const Integer bound = Integer(kTrialBound) * kTrialBound;
  std::vector<Integer> large;
  if (rest < bound) {
    large.push_back(rest);
  } else {
    split_large(rest, large);
  }
  std::sort(large.begin(), large.end());
  for (const auto& p : large) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

Integer expand(const PrimeFactorization& f) {
  Integer out = 1;
  for (const auto& [p, e] : f) out *= ipow(p, e);
  return out;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  IntMatrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DomainError("ragged matrix rows");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> which) const {
  IntMatrix out(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(which[i], c);
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

std::size_t rational_rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    }
    const Integer& p = a(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        t = a(i, j) * p - a(i, col) * a(rank, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

namespace {

void reduce_content(IntMatrix& a, std::size_t r) {
  Integer g = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(r, j).get_mpz_t());
  if (g <= 1) return;
  for (std::size_t j = 0; j < a.cols(); ++j) mpz_divexact(a(r, j).get_mpz_t(), a(r, j).get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& m) {
  // Right null space of m^T by integer Gauss-Jordan with content reduction.
  IntMatrix a = m.transposed();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(cols, false);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    }
    reduce_content(a, rank);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a(i, col) == 0) continue;
      Integer p = a(rank, col);
      Integer f = a(i, col);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = a(i, j) * p - f * a(rank, j);
      reduce_content(a, i);
    }
    pivot_cols.push_back(col);
    is_pivot[col] = true;
    ++rank;
  }

  Integer lcm = 1;
  for (std::size_t r = 0; r < rank; ++r) {
    Integer p = abs(a(r, pivot_cols[r]));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.get_mpz_t());
  }

  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Integer> v(cols, Integer(0));
    v[free] = lcm;
    for (std::size_t r = 0; r < rank; ++r) {
      Integer scale;
      mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), a(r, pivot_cols[r]).get_mpz_t());
      v[pivot_cols[r]] = -a(r, free) * scale;
    }
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_row_combination(const IntMatrix& rows,
                                                          std::span<const Integer> target) {
  if (target.size() != rows.cols()) {
    throw DomainError("target length does not match matrix width");
  }
  const std::size_t unknowns = rows.rows();
  const std::size_t equations = rows.cols();
  // Augmented system rows^T x = target over Q.
  std::vector<std::vector<Rational>> a(equations, std::vector<Rational>(unknowns + 1));
  for (std::size_t e = 0; e < equations; ++e) {
    for (std::size_t u = 0; u < unknowns; ++u) a[e][u] = Rational(rows(u, e));
    a[e][unknowns] = Rational(target[e]);
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_of_unknown(unknowns, equations);
  for (std::size_t u = 0; u < unknowns; ++u) {
    std::size_t pivot = rank;
    while (pivot < equations && a[pivot][u] == 0) ++pivot;
    if (pivot == equations) {
      throw DomainError("rows are linearly dependent");
    }
    std::swap(a[pivot], a[rank]);
    Rational inv = 1 / a[rank][u];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t e = 0; e < equations; ++e) {
      if (e == rank || a[e][u] == 0) continue;
      Rational f = a[e][u];
      for (std::size_t j = u; j <= unknowns; ++j) a[e][j] -= f * a[rank][j];
    }
    pivot_of_unknown[u] = rank;
    ++rank;
  }
  for (std::size_t e = rank; e < equations; ++e) {
    if (a[e][unknowns] != 0) return std::nullopt;
  }
  std::vector<Rational> x(unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) x[u] = a[pivot_of_unknown[u]][unknowns];
  return x;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors requires n >= 1");
  std::vector<std::uint64_t> out{1};
  if (n == 1) return out;
  for (const auto& [p, e] : factorize(Integer(static_cast<unsigned long>(n)))) {
    const std::uint64_t prime = p.get_ui();
    const std::size_t existing = out.size();
    std::uint64_t power = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cnpd
