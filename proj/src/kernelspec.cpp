#include "cnpd/kernelspec.hpp"

#include "cnpd/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cnpd {

namespace {

std::string position(std::size_t j) { return std::to_string(j + 1); }

}  // namespace

void check_raw(const RawSpec& raw) {
  if (raw.n.empty()) {
    throw ValidationError("dimension", "kernel spec needs at least one frequency");
  }
  if (raw.b.size() != raw.n.size()) {
    throw ValidationError("dimension", "weight count " + std::to_string(raw.b.size()) +
                                           " differs from frequency count " + std::to_string(raw.n.size()));
  }
  for (std::size_t j = 0; j < raw.n.size(); ++j) {
    if (raw.n[j] < 2) {
      throw ValidationError("frequency_range", "frequency n_" + position(j) + " = " + raw.n[j].get_str() +
                                                   " is below 2");
    }
  }
  std::set<Integer> seen;
  for (std::size_t j = 0; j < raw.n.size(); ++j) {
    if (!seen.insert(raw.n[j]).second) {
      throw ValidationError("distinct_frequencies", "frequency " + raw.n[j].get_str() + " appears more than once");
    }
  }
  for (std::size_t j = 0; j < raw.b.size(); ++j) {
    if (raw.b[j] <= 0) {
      throw ValidationError("positive_weights", "weight b_" + position(j) + " = " + to_string(raw.b[j]) +
                                                    " is not positive");
    }
  }
}

KernelSpec validate(const RawSpec& raw) {
  check_raw(raw);
  Rational sum = 0;
  for (const auto& b : raw.b) sum += b;
  if (sum != 1) {
    Rational deficit = 1 - sum;
    throw ValidationError("weights_sum", "weights sum to " + to_string(sum) + ", not 1 (deficit " +
                                             to_string(deficit) + ")",
                          to_string(deficit));
  }
  return KernelSpec(raw.b, raw.n);
}

KernelSpec KernelSpec::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != dimension()) throw DomainError("permutation length differs from dimension");
  std::vector<bool> used(perm.size(), false);
  std::vector<Rational> b(perm.size());
  std::vector<Integer> n(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || used[perm[i]]) throw DomainError("not a permutation");
    used[perm[i]] = true;
    b[i] = b_[perm[i]];
    n[i] = n_[perm[i]];
  }
  return KernelSpec(std::move(b), std::move(n));
}

namespace {

// g(sigma) = sum b_j n_j^{-sigma}, strictly decreasing in sigma.
struct WeightSum {
  std::vector<Real> b;
  std::vector<Real> log_n;

  explicit WeightSum(const RawSpec& raw) {
    for (std::size_t j = 0; j < raw.n.size(); ++j) {
      b.push_back(to_real(raw.b[j]));
      log_n.push_back(boost::multiprecision::log(to_real(raw.n[j])));
    }
  }

  Real operator()(const Real& sigma) const {
    Real sum = 0;
    for (std::size_t j = 0; j < b.size(); ++j) sum += b[j] * boost::multiprecision::exp(-sigma * log_n[j]);
    return sum;
  }

  Real max_log() const { return *std::max_element(log_n.begin(), log_n.end()); }
};

}  // namespace

Real solve_rho(const RawSpec& raw, const Real& tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  check_raw(raw);
  Rational exact_sum = 0;
  for (const auto& b : raw.b) exact_sum += b;
  if (exact_sum == 1) return Real(0);

  const WeightSum g(raw);
  Real lo = 0, hi = 0;
  if (exact_sum > 1) {
    hi = 1;
    while (g(hi) >= 1) {
      lo = hi;
      hi *= 2;
    }
  } else {
    lo = -1;
    while (g(lo) <= 1) {
      hi = lo;
      lo *= 2;
    }
  }

  // |g'| <= max ln n_j near the root, so this width bounds |g(rho) - 1| by tol/8.
  const Real width = tol / (8 * (1 + g.max_log()));
  const unsigned max_steps = 4 * precision_bits() + 256;
  Real mid = (lo + hi) / 2;
  for (unsigned step = 0; step < max_steps; ++step) {
    mid = (lo + hi) / 2;
    const Real value = g(mid);
    if (hi - lo < width && boost::multiprecision::abs(value - 1) < tol) break;
    if (value > 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

NormalizedWeights normalize(const RawSpec& raw, const Real& tol) {
  NormalizedWeights out;
  out.rho = solve_rho(raw, tol);
  out.n = raw.n;
  for (std::size_t j = 0; j < raw.n.size(); ++j) {
    out.b.push_back(to_real(raw.b[j]) *
                    boost::multiprecision::exp(-out.rho * boost::multiprecision::log(to_real(raw.n[j]))));
  }
  return out;
}

DirichletCoefficients weight_expansion(const KernelSpec& spec, Index n_max) {
  DirichletCoefficients base(n_max);
  base.set(1, Rational(1));
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    const Integer& n = spec.frequency(j);
    if (n <= n_max) base.set(n.get_ui(), -spec.weight(j));
  }
  return invert(base, n_max);
}

namespace {

void require_half_plane(const HalfPlanePoint& s, const char* name) {
  if (!(s.re > 0)) {
    throw DomainError(std::string("point ") + name + " must satisfy Re > 0, got Re = " + format_real(s.re, 12));
  }
}

}  // namespace

ComplexVector f_eval(const KernelSpec& spec, const HalfPlanePoint& s) {
  require_half_plane(s, "s");
  ComplexVector out;
  out.reserve(spec.dimension());
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    Complex term = pow_neg(spec.frequency(j), s);
    Real root = boost::multiprecision::sqrt(to_real(spec.weight(j)));
    out.emplace_back(root * term.re, root * term.im);
  }
  return out;
}

Complex kernel_inner(const KernelSpec& spec, const HalfPlanePoint& s, const HalfPlanePoint& u) {
  require_half_plane(s, "s");
  require_half_plane(u, "u");
  const Complex w = s + conj(u);
  Complex sum;
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    Complex term = pow_neg(spec.frequency(j), w);
    Real b = to_real(spec.weight(j));
    sum += Complex(b * term.re, b * term.im);
  }
  return sum;
}

Complex kernel_eval(const KernelSpec& spec, const HalfPlanePoint& s, const HalfPlanePoint& u) {
  return Complex(Real(1)) / (Complex(Real(1)) - kernel_inner(spec, s, u));
}

}  // namespace cnpd
