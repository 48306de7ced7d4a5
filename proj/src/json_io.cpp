#include "cnpd/json_io.hpp"

#include "cnpd/errors.hpp"

#include <fstream>
#include <regex>

namespace cnpd {

namespace {

[[noreturn]] void schema(const std::string& message) { throw ValidationError("schema", message); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()), 10);
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) schema(what + " must be an integer");
    return q.get_num();
  }
  schema(what + " must be an integer");
}

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j, what));
  schema(what + " must be a rational string such as \"1/3\"");
}

Json index_set_json(const IndexSet& s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("io", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("json_syntax", "'" + path + "': " + e.what());
  }
}

RawSpec spec_from_json(const Json& j) {
  if (!j.is_object()) schema("kernel spec must be a JSON object");
  if (!j.contains("b") || !j["b"].is_array()) schema("kernel spec needs an array \"b\"");
  if (!j.contains("n") || !j["n"].is_array()) schema("kernel spec needs an array \"n\"");
  RawSpec raw;
  for (std::size_t k = 0; k < j["b"].size(); ++k) {
    raw.b.push_back(rational_from_json(j["b"][k], "b_" + std::to_string(k + 1)));
  }
  for (std::size_t k = 0; k < j["n"].size(); ++k) {
    raw.n.push_back(integer_from_json(j["n"][k], "n_" + std::to_string(k + 1)));
  }
  return raw;
}

Json to_json(const KernelSpec& spec) {
  Json b = Json::array(), n = Json::array();
  for (const auto& w : spec.weights()) b.push_back(to_json(w));
  for (const auto& f : spec.frequencies()) n.push_back(integer_json(f));
  return {{"d", spec.dimension()}, {"b", b}, {"n", n}};
}

DirichletCoefficients coefficients_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("limit") || !j.contains("coeffs") || !j["coeffs"].is_object()) {
    schema("coefficient file needs \"limit\" and an object \"coeffs\"");
  }
  const Integer limit = integer_from_json(j["limit"], "limit");
  if (limit < 1 || !limit.fits_ulong_p()) schema("limit must be a positive integer");
  DirichletCoefficients c(limit.get_ui());
  for (const auto& [key, value] : j["coeffs"].items()) {
    const Rational idx = parse_rational(key);
    if (idx.get_den() != 1 || idx < 1) schema("coefficient index '" + key + "' must be a positive integer");
    if (idx > limit) schema("coefficient index " + key + " exceeds limit");
    c.set(idx.get_num().get_ui(), rational_from_json(value, "coefficient " + key));
  }
  return c;
}

Json to_json(const DirichletCoefficients& c) {
  Json coeffs = Json::object();
  for (const auto& [n, v] : c.terms()) coeffs[std::to_string(n)] = to_json(v);
  return {{"limit", c.limit()}, {"coeffs", coeffs}};
}

Json to_json(const Rational& q) { return Json(to_string(q)); }
Json to_json(const Real& x) { return Json(format_real(x)); }
Json to_json(const Complex& z) { return {{"re", format_real(z.re)}, {"im", format_real(z.im)}}; }

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(const Circuit& c) {
  Json beta = Json::array();
  for (const auto& b : c.beta) beta.push_back(integer_json(b));
  return {{"J", index_set_json(c.J)}, {"J1", index_set_json(c.J1)}, {"J2", index_set_json(c.J2)}, {"beta", beta}};
}

Json to_json(const VarietyPresentation& v) {
  Json rel = Json::array();
  for (const auto& q : v.relations) {
    rel.push_back({{"circuit", to_json(q.circuit)}, {"Asq", to_json(q.Asq)}, {"Bsq", to_json(q.Bsq)}});
  }
  return {{"d", v.d}, {"is_full_ball", v.is_full_ball}, {"relations", rel}};
}

Json to_json(const PatternCertificate& cert) {
  Json circuits = Json::array(), ids = Json::array();
  for (const auto& c : cert.matched_circuits) circuits.push_back(to_json(c));
  for (const auto& id : cert.weight_identities) {
    ids.push_back({{"J", index_set_json(id.J)}, {"lhs", to_json(id.lhs)}, {"rhs", to_json(id.rhs)}});
  }
  return {{"matched_circuits", circuits}, {"weight_identities", ids}};
}

Json to_json(const SimilarityResult& s) {
  Json out = {{"similar", s.similar}};
  out["certificate"] = s.certificate ? to_json(*s.certificate) : Json(nullptr);
  if (!s.similar) out["reason"] = s.reason;
  return out;
}

Json to_json(const ClassificationReport& r) {
  Json cert = Json::object();
  if (r.certificate) cert["pattern"] = to_json(*r.certificate);
  if (r.permutation) {
    Json perm = Json::array();
    for (std::size_t i : *r.permutation) perm.push_back(i + 1);
    cert["permutation"] = perm;
  }
  return {{"verdict", verdict_name(r.verdict)},
          {"theorem", r.theorem},
          {"certificate", cert.empty() ? Json(nullptr) : cert},
          {"notes", r.notes}};
}

Json to_json(const PsdReport& r) {
  return {{"is_psd", r.is_psd}, {"min_eigenvalue", r.min_eigenvalue ? to_json(*r.min_eigenvalue) : Json(nullptr)}};
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ValidationError("rational_syntax", "empty coordinate");
  if (s.back() != 'i') return {parse_rational(s), 0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto imaginary = [](std::string part) -> Rational {
    if (part.empty() || part == "+") return 1;
    if (part == "-") return -1;
    return parse_rational(part);
  };
  if (split == std::string::npos) return {0, imaginary(s)};
  return {parse_rational(s.substr(0, split)), imaginary(s.substr(split))};
}

GaussianPoint parse_gaussian_point(std::string_view text) {
  GaussianPoint out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_gaussian(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<HalfPlanePoint> points_from_json(const Json& j) {
  if (!j.is_array()) schema("points file must hold a JSON array");
  std::vector<HalfPlanePoint> out;
  for (const auto& item : j) {
    if (item.is_string()) {
      out.push_back(to_complex(parse_gaussian(item.get<std::string>())));
    } else if (item.is_object() && item.contains("re")) {
      const Rational re = rational_from_json(item["re"], "re");
      const Rational im = item.contains("im") ? rational_from_json(item["im"], "im") : Rational(0);
      out.push_back(to_complex(GaussianRational{re, im}));
    } else if (item.is_number_integer() || item.is_number_unsigned()) {
      out.push_back(to_complex(GaussianRational{rational_from_json(item, "point"), 0}));
    } else {
      schema("each point must be a string such as \"1+2i\" or an object {\"re\", \"im\"}");
    }
  }
  return out;
}

Real parse_real(std::string_view text, const char* clause) {
  static const std::regex pattern(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  const std::string s(text);
  if (!std::regex_match(s, pattern)) throw ValidationError(clause, "not a real number: '" + s + "'");
  return Real(s);
}

}  // namespace cnpd
