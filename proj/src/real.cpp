#include "cnpd/real.hpp"

#include "cnpd/errors.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

namespace cnpd {

namespace {

std::atomic<unsigned> g_precision_bits{0};

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

}  // namespace

void set_precision_bits(unsigned bits) {
  if (bits < 24) {
    throw DomainError("precision must be at least 24 bits");
  }
  g_precision_bits = bits;
  Real::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() { return g_precision_bits.load(); }

namespace {
[[maybe_unused]] const bool g_default_precision_applied = (set_precision_bits(kDefaultPrecisionBits), true);
}  // namespace

unsigned apply_precision_from_env() {
  unsigned bits = kDefaultPrecisionBits;
  if (const char* env = std::getenv("CNPD_PRECISION_BITS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v < 24 || v > 65536) {
      throw ValidationError("precision_bits", std::string("invalid CNPD_PRECISION_BITS '") + env + "'");
    }
    bits = static_cast<unsigned>(v);
  }
  set_precision_bits(bits);
  return bits;
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

std::string format_real(const Real& x, unsigned digits) {
  if (digits == 0) digits = bits_to_digits10(precision_bits()) - 1;
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.re * o.re + o.im * o.im;
  if (den == 0) throw DomainError("complex division by zero");
  Real r = (re * o.re + im * o.im) / den;
  im = (im * o.re - re * o.im) / den;
  re = std::move(r);
  return *this;
}

Real abs(const Complex& z) { return boost::multiprecision::sqrt(norm(z)); }

Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex log(const Complex& z) {
  if (z.re == 0 && z.im == 0) throw DomainError("log of zero");
  return {boost::multiprecision::log(abs(z)), arg(z)};
}

Complex pow_neg(const Integer& n, const Complex& s) {
  if (n == 1) return Complex(Real(1));
  Real ln = boost::multiprecision::log(to_real(n));
  return exp(Complex(-s.re * ln, -s.im * ln));
}

Real euclidean_norm(const ComplexVector& v) {
  Real sum = 0;
  for (const auto& z : v) sum += norm(z);
  return boost::multiprecision::sqrt(sum);
}

}  // namespace cnpd
