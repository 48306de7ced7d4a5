#include "cnpd/classify.hpp"

#include "cnpd/errors.hpp"

#include <algorithm>
#include <numeric>

namespace cnpd {

namespace {

std::string show(const IndexSet& J) {
  std::string out = "{";
  for (std::size_t k = 0; k < J.size(); ++k) out += (k ? "," : "") + std::to_string(J[k] + 1);
  return out + "}";
}

Rational weight_power(const KernelSpec& spec, const Circuit& c, const IndexSet& side) {
  Rational prod = 1;
  for (std::size_t i : side) prod *= rpow(spec.weight(i), c.beta_of(i).get_ui());
  return prod;
}

WeightIdentity identity_for(const KernelSpec& a, const KernelSpec& b, const Circuit& c) {
  return {c.J, weight_power(b, c, c.J1) * weight_power(a, c, c.J2), weight_power(b, c, c.J2) * weight_power(a, c, c.J1)};
}

SimilarityResult compare_families(const KernelSpec& a, const KernelSpec& b, const std::vector<Circuit>& ca,
                                  const std::vector<Circuit>& cb) {
  SimilarityResult r;
  if (ca.size() != cb.size()) {
    r.reason = "circuit families differ in size (" + std::to_string(ca.size()) + " vs " + std::to_string(cb.size()) + ")";
    return r;
  }
  PatternCertificate cert;
  for (std::size_t k = 0; k < ca.size(); ++k) {
    if (ca[k].J != cb[k].J) {
      r.reason = "circuit families differ: " + show(ca[k].J) + " vs " + show(cb[k].J);
      return r;
    }
    if (ca[k].beta != cb[k].beta) {
      r.reason = "circuit " + show(ca[k].J) + " has different exponent tuples";
      return r;
    }
    if (ca[k].J1 != cb[k].J1) {
      r.reason = "circuit " + show(ca[k].J) + " has different partitions";
      return r;
    }
    WeightIdentity id = identity_for(a, b, ca[k]);
    if (id.lhs != id.rhs) {
      r.reason = "weight identity fails on circuit " + show(ca[k].J) + ": " + to_string(id.lhs) + " vs " +
                 to_string(id.rhs);
      return r;
    }
    cert.matched_circuits.push_back(ca[k]);
    cert.weight_identities.push_back(std::move(id));
  }
  r.similar = true;
  r.certificate = std::move(cert);
  return r;
}

ClassificationReport never_isometric(const KernelSpec& a, const KernelSpec& b) {
  ClassificationReport r;
  r.verdict = Verdict::NotIsometricallyIsomorphic;
  r.theorem = "PropNeverIsomIso";
  r.notes.push_back("dimensions differ (" + std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()) +
                    ")");
  return r;
}

}  // namespace

SimilarityResult similar_pattern(const KernelSpec& a, const KernelSpec& b) {
  if (a.dimension() != b.dimension()) throw DomainError("similar_pattern needs specs of equal dimension");
  return compare_families(a, b, enumerate_circuits(a.frequencies()), enumerate_circuits(b.frequencies()));
}

bool verify_certificate(const KernelSpec& a, const KernelSpec& b, const PatternCertificate& cert) {
  if (a.dimension() != b.dimension()) return false;
  const auto ca = enumerate_circuits(a.frequencies());
  const auto cb = enumerate_circuits(b.frequencies());
  if (cert.matched_circuits != ca || cert.matched_circuits != cb) return false;
  if (cert.weight_identities.size() != ca.size()) return false;
  for (std::size_t k = 0; k < ca.size(); ++k) {
    const WeightIdentity fresh = identity_for(a, b, ca[k]);
    const WeightIdentity& given = cert.weight_identities[k];
    if (given.J != fresh.J || given.lhs != fresh.lhs || given.rhs != fresh.rhs || fresh.lhs != fresh.rhs) return false;
  }
  return true;
}

bool varieties_equal(const KernelSpec& a, const KernelSpec& b) { return similar_pattern(a, b).similar; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::IsometricallyIsomorphic: return "IsometricallyIsomorphic";
    case Verdict::Isomorphic: return "Isomorphic";
    case Verdict::NotIsometricallyIsomorphic: return "NotIsometricallyIsomorphic";
    case Verdict::NotIsomorphic: return "NotIsomorphic";
    case Verdict::UndecidedByTheory: return "UndecidedByTheory";
  }
  return "UndecidedByTheory";
}

ClassificationReport isometric_identity(const KernelSpec& a, const KernelSpec& b) {
  if (a.dimension() != b.dimension()) return never_isometric(a, b);
  ClassificationReport r;
  SimilarityResult s = similar_pattern(a, b);
  if (s.similar) {
    r.verdict = Verdict::IsometricallyIsomorphic;
    r.theorem = "ThmVarEqualSet";
    r.certificate = std::move(s.certificate);
    std::vector<std::size_t> id(a.dimension());
    std::iota(id.begin(), id.end(), std::size_t{0});
    r.permutation = std::move(id);
  } else {
    r.verdict = Verdict::UndecidedByTheory;
    r.theorem = "None";
    r.notes.push_back("not similar under the identity labeling: " + s.reason);
  }
  return r;
}

std::optional<GeneratingForm> generating_class_check(const KernelSpec& spec) {
  const std::size_t d = spec.dimension();
  if (d < 3) throw DomainError("generating class needs d >= 3");
  const auto circuits = enumerate_circuits(spec.frequencies());
  if (circuits.size() != 1 || circuits.front().J.size() != d) return std::nullopt;
  const Circuit& c = circuits.front();
  const IndexSet* single = c.J2.size() == 1 ? &c.J2 : (c.J1.size() == 1 ? &c.J1 : nullptr);
  if (single == nullptr || c.beta_of(single->front()) != 1) return std::nullopt;

  GeneratingForm form;
  form.dependent_index = single->front();
  for (std::size_t i = 0; i < d; ++i) {
    if (i == form.dependent_index) continue;
    form.generator_indices.push_back(i);
    form.exponents.push_back(c.beta_of(i));
  }
  return form;
}

namespace {

const Integer& exponent_at(const GeneratingForm& f, std::size_t index) {
  auto it = std::lower_bound(f.generator_indices.begin(), f.generator_indices.end(), index);
  return f.exponents[static_cast<std::size_t>(it - f.generator_indices.begin())];
}

std::optional<GeneratingForm> class_form(const KernelSpec& spec) {
  if (spec.dimension() < 3) return std::nullopt;
  return generating_class_check(spec);
}

}  // namespace

ClassificationReport generating_class_isomorphic(const KernelSpec& a, const KernelSpec& b) {
  if (a.dimension() != b.dimension()) return never_isometric(a, b);
  ClassificationReport r;
  const auto fa = class_form(a);
  const auto fb = class_form(b);
  if (!fa || !fb) {
    r.verdict = Verdict::UndecidedByTheory;
    r.theorem = "None";
    r.notes.push_back(std::string("outside the generating class: ") + (!fa ? "first" : "second") +
                      " spec has no dependent index with positive integer exponents over independent generators");
    return r;
  }
  const std::size_t d = a.dimension();
  const std::size_t dep_a = fa->dependent_index;
  const std::size_t dep_b = fb->dependent_index;

  // tau[dep_b] = dep_a is forced; the remaining slots run over the (d-1)!
  // arrangements of a's generators in lexicographic order, so the first hit
  // is the lexicographically smallest certifying permutation.
  IndexSet slots = fb->generator_indices;
  IndexSet pool = fa->generator_indices;
  std::vector<std::size_t> tau(d);
  tau[dep_b] = dep_a;
  do {
    bool exponents_match = true;
    for (std::size_t k = 0; k < slots.size() && exponents_match; ++k) {
      tau[slots[k]] = pool[k];
      exponents_match = exponent_at(*fa, pool[k]) == exponent_at(*fb, slots[k]);
    }
    if (!exponents_match) continue;
    for (std::size_t k = 0; k < slots.size(); ++k) tau[slots[k]] = pool[k];
    const KernelSpec moved = a.permuted(tau);
    SimilarityResult s = similar_pattern(moved, b);
    if (s.similar) {
      r.verdict = Verdict::IsometricallyIsomorphic;
      r.theorem = "ThmC";
      r.certificate = std::move(s.certificate);
      r.permutation = tau;
      break;
    }
  } while (std::next_permutation(pool.begin(), pool.end()));

  if (!r.permutation) {
    r.verdict = Verdict::NotIsomorphic;
    r.theorem = "ThmC";
    r.notes.push_back("no relabeling of the first spec admits a similar pattern with the second");
  }
  r.notes.push_back("neither multiplier algebra is isomorphic to the free multiplier algebra in " +
                    std::to_string(d - 1) + " variables");
  return r;
}

ClassificationReport classify(const KernelSpec& a, const KernelSpec& b) {
  if (a.dimension() != b.dimension()) return never_isometric(a, b);
  if (class_form(a) && class_form(b)) return generating_class_isomorphic(a, b);
  return isometric_identity(a, b);
}

}  // namespace cnpd
