// cnpd: JSON front end for the CNP Dirichlet kernel library.

#include "cnpd/classify.hpp"
#include "cnpd/errors.hpp"
#include "cnpd/json_io.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>

using namespace cnpd;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitDomain = 3;
constexpr int kExitUsage = 64;

KernelSpec load_spec(const std::string& path) { return validate(spec_from_json(read_json_file(path))); }

RawSpec load_raw(const std::string& path) {
  RawSpec raw = spec_from_json(read_json_file(path));
  check_raw(raw);
  return raw;
}

Json optional_index(const std::optional<Index>& i) { return i ? Json(*i) : Json(nullptr); }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of CNP Dirichlet series kernels"};
  app.require_subcommand(1);

  std::function<Json()> action;
  std::string spec_path, other_path, points_path, weights_path;
  std::string tol_text, point_text, s_text, u_text, mode_text = "kernel";
  long long limit = 0, m_arg = 0, n_arg = 0;
  bool exact = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a kernel spec");
  validate_cmd->add_option("SPEC", spec_path)->required();
  validate_cmd->callback([&] {
    action = [&] {
      Json out = to_json(load_spec(spec_path));
      out["valid"] = true;
      return out;
    };
  });

  auto* rho_cmd = app.add_subcommand("rho", "normalization root of sum b_j n_j^{-rho} = 1");
  rho_cmd->add_option("SPEC", spec_path)->required();
  rho_cmd->add_option("--tol", tol_text)->default_val("1e-30");
  rho_cmd->callback([&] {
    action = [&] {
      const Real tol = parse_real(tol_text);
      return Json{{"rho", to_json(solve_rho(load_raw(spec_path), tol))}, {"tol", tol_text}};
    };
  });

  auto* normalize_cmd = app.add_subcommand("normalize", "rescale weights to sum 1");
  normalize_cmd->add_option("SPEC", spec_path)->required();
  normalize_cmd->add_option("--tol", tol_text)->default_val("1e-30");
  normalize_cmd->callback([&] {
    action = [&] {
      const NormalizedWeights nw = normalize(load_raw(spec_path), parse_real(tol_text));
      Json b = Json::array(), n = Json::array();
      Real sum = 0;
      for (const auto& w : nw.b) {
        b.push_back(to_json(w));
        sum += w;
      }
      for (const auto& f : nw.n) n.push_back(f.get_str());
      return Json{{"rho", to_json(nw.rho)}, {"b", b}, {"n", n}, {"sum", to_json(sum)}};
    };
  });

  auto* weights_cmd = app.add_subcommand("weights", "Dirichlet coefficients of the kernel");
  weights_cmd->add_option("SPEC", spec_path)->required();
  weights_cmd->add_option("--limit", limit)->required();
  weights_cmd->callback([&] {
    action = [&] {
      if (limit < 1) throw DomainError("--limit must be at least 1");
      return to_json(weight_expansion(load_spec(spec_path), static_cast<Index>(limit)));
    };
  });

  auto* cnp_cmd = app.add_subcommand("cnp-check", "sign test on the inverse of a weight series");
  cnp_cmd->add_option("WEIGHTS", weights_path)->required();
  cnp_cmd->add_option("--limit", limit)->required();
  cnp_cmd->callback([&] {
    action = [&] {
      if (limit < 1) throw DomainError("--limit must be at least 1");
      const CnpVerdict v = cnp_check(coefficients_from_json(read_json_file(weights_path)), static_cast<Index>(limit));
      return Json{{"is_cnp_up_to_limit", v.is_cnp_up_to_limit}, {"witness", optional_index(v.witness)},
                  {"limit", v.limit}};
    };
  });

  auto* circuits_cmd = app.add_subcommand("circuits", "minimal dependent frequency sets");
  circuits_cmd->add_option("SPEC", spec_path)->required();
  circuits_cmd->callback([&] {
    action = [&] {
      const KernelSpec spec = load_spec(spec_path);
      Json list = Json::array();
      for (const auto& c : enumerate_circuits(spec.frequencies())) list.push_back(to_json(c));
      return Json{{"circuits", list}, {"log_independent", list.empty()}};
    };
  });

  auto* variety_cmd = app.add_subcommand("variety", "defining relations of the multiplier variety");
  variety_cmd->add_option("SPEC", spec_path)->required();
  variety_cmd->callback([&] { action = [&] { return to_json(build_variety(load_spec(spec_path))); }; });

  auto* member_cmd = app.add_subcommand("member", "variety membership of a point");
  member_cmd->add_option("SPEC", spec_path)->required();
  member_cmd->add_option("--point", point_text)->required();
  member_cmd->add_flag("--exact", exact);
  member_cmd->add_option("--tol", tol_text)->default_val("1e-10");
  member_cmd->callback([&] {
    action = [&] {
      const VarietyPresentation v = build_variety(load_spec(spec_path));
      const GaussianPoint z = parse_gaussian_point(point_text);
      if (exact) return Json{{"member", member_exact(v, z)}, {"mode", "exact"}};
      return Json{{"member", member_numeric(v, to_complex(z), parse_real(tol_text))}, {"mode", "numeric"},
                  {"tol", tol_text}};
    };
  });

  auto* invert_cmd = app.add_subcommand("invert-point", "parameter s with f(s) = z");
  invert_cmd->add_option("SPEC", spec_path)->required();
  invert_cmd->add_option("--point", point_text)->required();
  invert_cmd->add_option("--tol", tol_text)->default_val("1e-10");
  invert_cmd->callback([&] {
    action = [&] {
      const auto s = invert_point(load_spec(spec_path), to_complex(parse_gaussian_point(point_text)),
                                  parse_real(tol_text));
      return Json{{"s", s ? to_json(*s) : Json(nullptr)}};
    };
  });

  auto* eval_cmd = app.add_subcommand("eval", "feature map f(s) and kernel K(s, u)");
  eval_cmd->add_option("SPEC", spec_path)->required();
  eval_cmd->add_option("--s", s_text)->required();
  eval_cmd->add_option("--u", u_text);
  eval_cmd->callback([&] {
    action = [&] {
      const KernelSpec spec = load_spec(spec_path);
      const Complex s = to_complex(parse_gaussian(s_text));
      const Complex u = u_text.empty() ? s : to_complex(parse_gaussian(u_text));
      const ComplexVector f = f_eval(spec, s);
      return Json{{"s", to_json(s)}, {"u", to_json(u)}, {"f", to_json(f)}, {"f_norm", to_json(euclidean_norm(f))},
                  {"kernel", to_json(kernel_eval(spec, s, u))}};
    };
  });

  auto* similar_cmd = app.add_subcommand("similar", "similar-pattern test");
  similar_cmd->add_option("A", spec_path)->required();
  similar_cmd->add_option("B", other_path)->required();
  similar_cmd->callback([&] {
    action = [&] { return to_json(similar_pattern(load_spec(spec_path), load_spec(other_path))); };
  });

  auto* classify_cmd = app.add_subcommand("classify", "isomorphism verdict for two kernels");
  classify_cmd->add_option("A", spec_path)->required();
  classify_cmd->add_option("B", other_path)->required();
  classify_cmd->callback([&] {
    action = [&] { return to_json(classify(load_spec(spec_path), load_spec(other_path))); };
  });

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix and positivity check");
  gram_cmd->add_option("SPEC", spec_path)->required();
  gram_cmd->add_option("--points", points_path)->required();
  gram_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"kernel", "one_minus_inv"}))->default_val("kernel");
  gram_cmd->add_option("--tol", tol_text)->default_val("1e-8");
  gram_cmd->callback([&] {
    action = [&] {
      const KernelSpec spec = load_spec(spec_path);
      const auto points = points_from_json(read_json_file(points_path));
      const GramMode mode = mode_text == "kernel" ? GramMode::kernel : GramMode::one_minus_inv;
      const GramMatrix g = gram_matrix(spec, points, mode);
      Json rows = Json::array();
      for (std::size_t i = 0; i < g.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < g.size(); ++j) row.push_back(to_json(g(i, j)));
        rows.push_back(row);
      }
      Json out = to_json(psd_check(g, parse_real(tol_text)));
      out["size"] = g.size();
      out["mode"] = mode_text;
      out["entries"] = rows;
      return out;
    };
  });

  auto* dm_cmd = app.add_subcommand("dm", "ordered factorization count d_m(n)");
  dm_cmd->add_option("--m", m_arg)->required();
  dm_cmd->add_option("--n", n_arg)->required();
  dm_cmd->callback([&] {
    action = [&] {
      if (m_arg < 1 || n_arg < 1) throw DomainError("d_m(n) needs m >= 1 and n >= 1");
      const Integer v = ordered_factorization_count(static_cast<unsigned long>(m_arg), static_cast<Index>(n_arg));
      return Json{{"m", m_arg}, {"n", n_arg}, {"d_m", v.get_str()}};
    };
  });

  auto* zeta_cmd = app.add_subcommand("zeta-factor", "divisor-sum condition for frequencies 2..d+1");
  zeta_cmd->add_option("SPEC", spec_path)->required();
  zeta_cmd->add_option("--limit", limit)->required();
  zeta_cmd->callback([&] {
    action = [&] {
      if (limit < 1) throw DomainError("--limit must be at least 1");
      const RawSpec raw = load_raw(spec_path);
      for (std::size_t j = 0; j < raw.n.size(); ++j) {
        if (raw.n[j] != static_cast<unsigned long>(j + 2)) {
          throw ValidationError("frequency_prefix", "zeta-factor needs frequencies 2, 3, ..., d+1 in order");
        }
      }
      const ZetaFactorVerdict v = zeta_factor_condition(raw.b, static_cast<Index>(limit));
      return Json{{"holds_up_to_limit", v.holds_up_to_limit}, {"witness", optional_index(v.witness)},
                  {"limit", v.limit}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    apply_precision_from_env();
    emit(action());
    return 0;
  } catch (const ValidationError& e) {
    Json err{{"error", "validation"}, {"violated_clause", e.clause()}, {"message", e.what()}};
    if (!e.detail().empty()) err["detail"] = e.detail();
    emit(err);
    return kExitValidation;
  } catch (const std::exception& e) {
    emit(Json{{"error", "domain"}, {"message", e.what()}});
    return kExitDomain;
  }
}
