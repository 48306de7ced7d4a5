#pragma once

#include "cnpd/exactmath.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

namespace cnpd {

// Variable-precision binary float; precision is a process-wide setting.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

constexpr unsigned kDefaultPrecisionBits = 128;

// Sets the working precision for Real values created afterwards.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Reads CNPD_PRECISION_BITS (default 128) and applies it.
unsigned apply_precision_from_env();

// RAII override of the working precision, restored on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(precision_bits()) { set_precision_bits(bits); }
  ~PrecisionScope() { set_precision_bits(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rational& q);
Real to_real(const Integer& z);

// Decimal rendering with the given number of significant digits
// (0 = enough digits for the current precision).
std::string format_real(const Real& x, unsigned digits = 0);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit real embedding
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch, Im in (-pi, pi]

// n^{-s} for integer n >= 1.
Complex pow_neg(const Integer& n, const Complex& s);

using ComplexVector = std::vector<Complex>;

Real euclidean_norm(const ComplexVector& v);

}  // namespace cnpd
