#include "cnpd/variety.hpp"

#include "cnpd/errors.hpp"
#include "cnpd/numeric.hpp"

#include <algorithm>

namespace cnpd {

VarietyPresentation build_variety(const KernelSpec& spec) {
  VarietyPresentation v;
  v.d = spec.dimension();
  for (auto& c : enumerate_circuits(spec.frequencies())) {
    PolyRelation q{std::move(c), 1, 1};
    for (std::size_t i : q.circuit.J1) q.Asq *= rpow(spec.weight(i), q.circuit.beta_of(i).get_ui());
    for (std::size_t i : q.circuit.J2) q.Bsq *= rpow(spec.weight(i), q.circuit.beta_of(i).get_ui());
    v.relations.push_back(std::move(q));
  }
  v.is_full_ball = v.relations.empty();
  return v;
}

Complex to_complex(const GaussianRational& z) { return {to_real(z.re), to_real(z.im)}; }

ComplexVector to_complex(const GaussianPoint& z) {
  ComplexVector out;
  out.reserve(z.size());
  for (const auto& c : z) out.push_back(to_complex(c));
  return out;
}

namespace {

void require_length(const VarietyPresentation& v, std::size_t size) {
  if (size != v.d) {
    throw DomainError("point has " + std::to_string(size) + " coordinates, variety lives in dimension " +
                      std::to_string(v.d));
  }
}

template <class T>
T monomial(const Circuit& c, const IndexSet& side, const std::vector<T>& z, T one) {
  T prod = one;
  for (std::size_t i : side) {
    const unsigned long e = c.beta_of(i).get_ui();
    for (unsigned long k = 0; k < e; ++k) prod = prod * z[i];
  }
  return prod;
}

}  // namespace

bool member_exact(const VarietyPresentation& v, const GaussianPoint& z) {
  require_length(v, z.size());
  Rational sq = 0;
  for (const auto& c : z) sq += norm(c);
  if (sq >= 1) return false;
  const GaussianRational one{1, 0};
  for (const auto& q : v.relations) {
    const GaussianRational p1 = monomial(q.circuit, q.circuit.J1, z, one);
    const GaussianRational p2 = monomial(q.circuit, q.circuit.J2, z, one);
    const Rational n1 = norm(p1), n2 = norm(p2);
    if (n1 == 0 && n2 == 0) continue;
    if (q.Bsq * n1 != q.Asq * n2) return false;
    const GaussianRational ray = p1 * conj(p2);
    if (ray.im != 0 || ray.re < 0) return false;
  }
  return true;
}

Complex relation_value(const PolyRelation& q, const ComplexVector& z) {
  const Complex one(Real(1));
  const Complex p1 = monomial(q.circuit, q.circuit.J1, z, one);
  const Complex p2 = monomial(q.circuit, q.circuit.J2, z, one);
  const Real a = boost::multiprecision::sqrt(to_real(q.Asq));
  const Real b = boost::multiprecision::sqrt(to_real(q.Bsq));
  return Complex(a * p2.re, a * p2.im) - Complex(b * p1.re, b * p1.im);
}

bool member_numeric(const VarietyPresentation& v, const ComplexVector& z, const Real& tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  require_length(v, z.size());
  if (!(euclidean_norm(z) < 1)) return false;
  return std::all_of(v.relations.begin(), v.relations.end(),
                     [&](const PolyRelation& q) { return abs(relation_value(q, z)) < tol; });
}

std::optional<Complex> invert_point(const KernelSpec& spec, const ComplexVector& z, const Real& tol,
                                    unsigned max_branch) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (z.size() != spec.dimension()) throw DomainError("point length differs from dimension");
  if (std::all_of(z.begin(), z.end(), [](const Complex& c) { return c.re == 0 && c.im == 0; })) {
    throw DomainError("the origin is not the image of any parameter");
  }
  if (z[0].re == 0 && z[0].im == 0) return std::nullopt;

  const Real root = boost::multiprecision::sqrt(to_real(spec.weight(0)));
  const Real ln_n = boost::multiprecision::log(to_real(spec.frequency(0)));
  const Complex l = log(Complex(z[0].re / root, z[0].im / root));
  const Complex s0(-l.re / ln_n, -l.im / ln_n);
  if (!(s0.re > 0)) return std::nullopt;

  const Real period = 2 * boost::multiprecision::acos(Real(-1)) / ln_n;
  for (unsigned k = 0; k <= max_branch; ++k) {
    for (int sign : {1, -1}) {
      if (k == 0 && sign < 0) continue;
      const Complex s(s0.re, s0.im + sign * static_cast<int>(k) * period);
      const ComplexVector image = f_eval(spec, s);
      ComplexVector diff(image.size());
      for (std::size_t j = 0; j < image.size(); ++j) diff[j] = image[j] - z[j];
      if (euclidean_norm(diff) < tol) return s;
    }
  }
  return std::nullopt;
}

AffineRankReport affine_rank(const KernelSpec& spec, std::size_t sample_count) {
  const std::size_t d = spec.dimension();
  if (sample_count < d) throw DomainError("affine_rank needs at least d samples");
  std::vector<ComplexVector> rows;
  const Real step("17.3");
  for (std::size_t k = 0; k < sample_count; ++k) {
    rows.push_back(f_eval(spec, Complex(Real(1), step * static_cast<unsigned>(k))));
  }
  // M^H M is d x d Hermitian; its eigenvalues are the squared singular values.
  GramMatrix mhm(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Complex sum;
      for (const auto& r : rows) sum += conj(r[a]) * r[b];
      mhm(a, b) = sum;
    }
  }
  AffineRankReport report;
  for (const auto& lambda : hermitian_eigenvalues(mhm)) {
    report.singular_values.push_back(lambda > 0 ? boost::multiprecision::sqrt(lambda) : Real(0));
  }
  std::sort(report.singular_values.begin(), report.singular_values.end(), std::greater<Real>());
  const Real top = report.singular_values.empty() ? Real(0) : report.singular_values.front();
  report.cutoff = Real("1e-10") * top;
  report.gap = 0;
  for (const auto& sigma : report.singular_values) {
    if (sigma > report.cutoff) {
      ++report.rank;
      report.gap = report.cutoff > 0 ? sigma / report.cutoff : Real(0);
    }
  }
  return report;
}

}  // namespace cnpd
