#pragma once

#include "cnpd/circuits.hpp"
#include "cnpd/kernelspec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cnpd {

// prod_{J1} c^beta * prod_{J2} b^beta (lhs) against prod_{J2} c^beta * prod_{J1} b^beta (rhs).
struct WeightIdentity {
  IndexSet J;
  Rational lhs;
  Rational rhs;
};

struct PatternCertificate {
  std::vector<Circuit> matched_circuits;
  std::vector<WeightIdentity> weight_identities;
};

struct SimilarityResult {
  bool similar = false;
  std::optional<PatternCertificate> certificate;  // set iff similar
  std::string reason;                             // why not, when !similar
};

// Throws DomainError when the dimensions differ.
SimilarityResult similar_pattern(const KernelSpec& a, const KernelSpec& b);

// Recomputes both circuit families and every identity from scratch.
bool verify_certificate(const KernelSpec& a, const KernelSpec& b, const PatternCertificate& cert);

bool varieties_equal(const KernelSpec& a, const KernelSpec& b);

enum class Verdict { IsometricallyIsomorphic, Isomorphic, NotIsometricallyIsomorphic, NotIsomorphic, UndecidedByTheory };

const char* verdict_name(Verdict v);

struct ClassificationReport {
  Verdict verdict = Verdict::UndecidedByTheory;
  std::string theorem;  // "PropNeverIsomIso", "ThmVarEqualSet", "ThmC" or "None"
  std::optional<PatternCertificate> certificate;
  // 0-based; a.permuted(*permutation) is similar to b.
  std::optional<std::vector<std::size_t>> permutation;
  std::vector<std::string> notes;
};

ClassificationReport isometric_identity(const KernelSpec& a, const KernelSpec& b);

// n_dependent = prod_k n_{generators[k]}^{exponents[k]}, all exponents >= 1,
// generators log-independent.
struct GeneratingForm {
  IndexSet generator_indices;
  std::size_t dependent_index = 0;
  std::vector<Integer> exponents;
};

// Throws DomainError when d < 3.
std::optional<GeneratingForm> generating_class_check(const KernelSpec& spec);

// Decision inside the class of generating_class_check. The reported
// permutation is the lexicographically smallest certifying one.
ClassificationReport generating_class_isomorphic(const KernelSpec& a, const KernelSpec& b);

// never-isom for d mismatch, the generating-class decision when both specs
// belong to it, otherwise isometric_identity.
ClassificationReport classify(const KernelSpec& a, const KernelSpec& b);

}  // namespace cnpd
