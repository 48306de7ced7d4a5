#include "cnpd/numeric.hpp"

#include "cnpd/errors.hpp"

#include <algorithm>

namespace cnpd {

namespace mp = boost::multiprecision;

Real GramMatrix::max_abs() const {
  Real best = 0;
  for (const auto& z : data_) best = std::max(best, abs(z));
  return best;
}

GramMatrix gram_matrix(const KernelSpec& spec, std::span<const HalfPlanePoint> points, GramMode mode) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].re > 0)) throw DomainError("gram point " + std::to_string(i + 1) + " has Re <= 0");
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i].re == points[j].re && points[i].im == points[j].im) {
        throw DomainError("gram points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                          " coincide");
      }
    }
  }
  GramMatrix g(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex inner = kernel_inner(spec, points[i], points[j]);
      g(i, j) = mode == GramMode::kernel ? Complex(Real(1)) / (Complex(Real(1)) - inner) : inner;
      g(j, i) = conj(g(i, j));
    }
  }
  return g;
}

namespace {

using SymMatrix = std::vector<std::vector<Real>>;

// Householder reduction of a real symmetric matrix to tridiagonal form:
// diagonal in d, subdiagonal in e[1..n-1]. Destroys a.
void tridiagonalize(SymMatrix& a, std::vector<Real>& d, std::vector<Real>& e) {
  const int n = static_cast<int>(a.size());
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    Real h = 0;
    if (l > 0) {
      Real scale = 0;
      for (int k = 0; k <= l; ++k) scale += mp::abs(a[i][k]);
      if (scale == 0) {
        e[i] = a[i][l];
      } else {
        for (int k = 0; k <= l; ++k) {
          a[i][k] /= scale;
          h += a[i][k] * a[i][k];
        }
        Real f = a[i][l];
        Real g = f >= 0 ? Real(-mp::sqrt(h)) : Real(mp::sqrt(h));
        e[i] = scale * g;
        h -= f * g;
        a[i][l] = f - g;
        f = 0;
        for (int j = 0; j <= l; ++j) {
          g = 0;
          for (int k = 0; k <= j; ++k) g += a[j][k] * a[i][k];
          for (int k = j + 1; k <= l; ++k) g += a[k][j] * a[i][k];
          e[j] = g / h;
          f += e[j] * a[i][j];
        }
        const Real hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a[i][j];
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) a[j][k] -= f * e[k] + g * a[i][k];
        }
      }
    } else {
      e[i] = a[i][l];
    }
    d[i] = h;
  }
  e[0] = 0;
  for (int i = 0; i < n; ++i) d[i] = a[i][i];
}

// Implicit QL with Wilkinson-type shifts on the tridiagonal (d, e).
void tridiagonal_ql(std::vector<Real>& d, std::vector<Real>& e) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  if (n > 0) e[n - 1] = 0;
  const int max_iter = 64 + 4 * static_cast<int>(precision_bits());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const Real dd = mp::abs(d[m]) + mp::abs(d[m + 1]);
        if (mp::abs(e[m]) + dd == dd) break;
      }
      if (m != l) {
        if (iter++ == max_iter) throw DomainError("eigenvalue iteration did not converge");
        Real g = (d[l + 1] - d[l]) / (2 * e[l]);
        Real r = mp::hypot(g, Real(1));
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? mp::abs(r) : Real(-mp::abs(r))));
        Real s = 1, c = 1, p = 0;
        int i;
        for (i = m - 1; i >= l; --i) {
          Real f = s * e[i];
          const Real b = c * e[i];
          r = mp::hypot(f, g);
          e[i + 1] = r;
          if (r == 0) {
            d[i + 1] -= p;
            e[m] = 0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<Real> hermitian_eigenvalues(const GramMatrix& m) {
  const std::size_t n = m.size();
  const Real scale = std::max(Real(1), m.max_abs());
  const Real herm_tol = Real("1e-14") * scale;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (abs(m(i, j) - conj(m(j, i))) > herm_tol) {
        throw DomainError("matrix is not Hermitian at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                          ")");
      }
    }
  }
  // H = A + iB acts on C^n like [[A, -B], [B, A]] on R^{2n}; every eigenvalue doubles.
  SymMatrix a(2 * n, std::vector<Real>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Real re = (m(i, j).re + m(j, i).re) / 2;
      const Real im = (m(i, j).im - m(j, i).im) / 2;
      a[i][j] = re;
      a[i + n][j + n] = re;
      a[i][j + n] = -im;
      a[i + n][j] = im;
    }
  }
  std::vector<Real> d(2 * n), e(2 * n);
  tridiagonalize(a, d, e);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  std::vector<Real> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back((d[2 * k] + d[2 * k + 1]) / 2);
  return out;
}

PsdReport psd_check(const GramMatrix& m, const Real& tol) {
  if (!(tol >= 0)) throw DomainError("tolerance must be non-negative");
  PsdReport report;
  if (m.size() == 0) return report;
  const auto eig = hermitian_eigenvalues(m);
  report.min_eigenvalue = eig.front();
  report.is_psd = eig.front() >= -tol * std::max(Real(1), m.max_abs());
  return report;
}

Real reproducing_check(const KernelSpec& spec, const DirichletCoefficients& f, const HalfPlanePoint& u,
                       Index n_max) {
  if (!(u.re > 0)) throw DomainError("point u must satisfy Re > 0");
  const DirichletCoefficients w = weight_expansion(spec, n_max);
  Complex inner, direct;
  for (const auto& [n, an] : f.terms()) {
    if (n > n_max) throw TruncationError("coefficient index " + std::to_string(n) + " beyond truncation");
    const Rational wn = w.at(n);
    if (wn == 0) throw DomainError("coefficient at " + std::to_string(n) + " outside the weight support");
    const Real a = to_real(an);
    const Real wr = to_real(wn);
    const Complex term = pow_neg(Integer(static_cast<unsigned long>(n)), u);
    // Coefficient of K(., u) at n is w_n n^{-conj(u)}.
    const Complex kernel_coeff = pow_neg(Integer(static_cast<unsigned long>(n)), conj(u));
    const Complex c = conj(Complex(wr * kernel_coeff.re, wr * kernel_coeff.im));
    inner += Complex(a * c.re / wr, a * c.im / wr);
    direct += Complex(a * term.re, a * term.im);
  }
  return abs(inner - direct);
}

}  // namespace cnpd
