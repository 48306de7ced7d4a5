#pragma once

#include "cnpd/circuits.hpp"
#include "cnpd/classify.hpp"
#include "cnpd/dirichlet.hpp"
#include "cnpd/kernelspec.hpp"
#include "cnpd/numeric.hpp"
#include "cnpd/variety.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace cnpd {

using Json = nlohmann::json;

// Structural problems raise ValidationError with clause "schema"; unreadable
// files "io"; malformed JSON "json_syntax".
Json read_json_file(const std::string& path);

// {"b": ["1/3", ...], "n": [2, ...]}; weights may also be JSON integers and
// frequencies decimal strings.
RawSpec spec_from_json(const Json& j);
Json to_json(const KernelSpec& spec);

// {"limit": N, "coeffs": {"2": "1/2", ...}}
DirichletCoefficients coefficients_from_json(const Json& j);
Json to_json(const DirichletCoefficients& c);

Json to_json(const Rational& q);
Json to_json(const Real& x);
Json to_json(const Complex& z);
Json to_json(const ComplexVector& v);
Json to_json(const Circuit& c);
Json to_json(const VarietyPresentation& v);
Json to_json(const PatternCertificate& cert);
Json to_json(const SimilarityResult& s);
Json to_json(const ClassificationReport& r);
Json to_json(const PsdReport& r);

// One coordinate: "re", "re+imi", "re-imi", "imi" with rational or decimal parts.
GaussianRational parse_gaussian(std::string_view text);
// Comma-separated coordinates.
GaussianPoint parse_gaussian_point(std::string_view text);

// A gram points file holds an array of coordinate strings or {"re","im"} objects.
std::vector<HalfPlanePoint> points_from_json(const Json& j);

// Decimal or scientific notation; ValidationError clause "tolerance" otherwise.
Real parse_real(std::string_view text, const char* clause = "tolerance");

}  // namespace cnpd
