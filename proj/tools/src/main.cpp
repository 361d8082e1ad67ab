#include "acceptance.hpp"
#include "commands.hpp"
#include "spec_parse.hpp"

#include "linset/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace linset;
using namespace linset::app;

enum Exit { kOk = 0, kFailure = 1, kInvalidConfig = 2, kBudget = 3 };

struct Common {
  std::uint32_t p = 3;
  std::uint32_t e = 1;
  std::uint32_t t = 3;
  unsigned k = 1;
  std::string modulus_file;
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;
  std::string out;
  std::string format = "json";
};

void add_field_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "characteristic (odd prime)")->capture_default_str();
  cmd->add_option("--e", c.e, "q = p^e")->capture_default_str();
  cmd->add_option("--t", c.t, "n = 2t, t >= 3")->capture_default_str();
  cmd->add_option("--modulus-file", c.modulus_file, "coefficients c_0..c_{en} of the defining polynomial");
}

void add_run_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--workers", c.workers, "worker threads for exhaustive sweeps")->capture_default_str();
  cmd->add_option("--budget", c.budget, "candidate budget for equivalence searches")->capture_default_str();
  cmd->add_option("--out", c.out, "output file (default stdout)");
  cmd->add_option("--format", c.format, "json or csv (csv: rank distribution only)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

std::shared_ptr<const FieldCtx> make_field(const Common& c) {
  FieldSpec spec{c.p, c.e, c.t, {}};
  if (!c.modulus_file.empty()) spec.modulus = read_modulus_file(c.modulus_file);
  return build_field(spec);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + c.out);
  f << text;
}

void emit_json(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

int exit_for(Errc code) { return code == Errc::BudgetExceeded ? kBudget : kInvalidConfig; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattered linearized polynomials, linear sets and rank-metric codes"};
  app.require_subcommand(1);
  Common c;

  auto* verify = app.add_subcommand("verify-scattered", "both scatteredness checkers against the predicate");
  auto* witness = app.add_subcommand("witness", "non-scatteredness witnesses for psi^(k)");
  auto* baer = app.add_subcommand("baer-check", "Baer subline partition of L_psi^(k)");
  auto* code = app.add_subcommand("code-report", "rank code C_f: distance, MRD, distribution, idealisers");
  auto* equiv = app.add_subcommand("equiv", "GL/GammaL equivalence of defining subspaces");
  auto* geometry = app.add_subcommand("geometry", "Gamma_k, sigma intersections, projection");
  auto* lset = app.add_subcommand("linear-set", "point set of L_f");
  auto* accept = app.add_subcommand("acceptance", "run the acceptance grid");

  for (auto* cmd : {verify, witness, baer, code, geometry}) {
    add_field_flags(cmd, c);
    add_run_flags(cmd, c);
    cmd->add_option("--k", c.k, "psi^(k)")->capture_default_str();
  }
  for (auto* cmd : {equiv, lset}) {
    add_field_flags(cmd, c);
    add_run_flags(cmd, c);
  }
  add_run_flags(accept, c);

  std::optional<std::string> code_poly;
  bool skip_idealisers = false;
  code->add_option("--poly", code_poly, "polynomial descriptor instead of psi^(k)");
  code->add_flag("--no-idealisers", skip_idealisers, "skip the idealiser computation");

  EquivRequest req;
  std::string k_list;
  bool gl_only = false;
  equiv->add_option("--left", req.left, "descriptor(s): psi:k, u1:s, u2:s,delta|all, u3:s,delta|all, u4, u5, poly:[..]");
  equiv->add_option("--right", req.right, "descriptor(s), as --left");
  equiv->add_option("--k-list", k_list, "pairwise psi^(k) comparison, e.g. 1,3,5,7");
  equiv->add_flag("--gl-only", gl_only, "skip field automorphisms");

  bool no_projection = false;
  geometry->add_flag("--no-projection", no_projection, "skip the projection sweep");

  std::string lset_poly = "psi:1";
  bool with_points = false;
  lset->add_option("--poly", lset_poly, "polynomial descriptor")->capture_default_str();
  lset->add_flag("--points", with_points, "list the points");

  std::vector<std::string> only, extra;
  accept->add_option("--only", only, "criterion names: " + [] {
    std::string s;
    for (const auto& n : criterion_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->delimiter(',');
  accept->add_option("--extra-field", extra, "extra p,e,t for the scatteredness grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidConfig;
  }

  const RunConfig cfg{c.workers, c.budget};
  try {
    if (accept->parsed()) {
      AcceptanceOptions opts;
      opts.only = only;
      opts.workers = c.workers;
      opts.budget = c.budget;
      for (const auto& s : extra) opts.extra_fields.push_back(parse_field_triple(s));
      const auto summary = run_acceptance(opts);
      if (summary.invalid_config) {
        std::cerr << "invalid-config: " << summary.error << "\n";
        if (c.format == "json") emit_json(c, {{"schema", kSchema}, {"command", "acceptance"}, {"status", "invalid-config"},
                                              {"error", summary.error}});
        return kInvalidConfig;
      }
      if (c.format == "json" && !c.out.empty()) {
        json results = json::array();
        for (const auto& r : summary.results) {
          results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        emit_json(c, {{"schema", kSchema}, {"command", "acceptance"}, {"results", results},
                      {"all_passed", summary.all_passed()}});
      }
      for (const auto& r : summary.results) std::cout << format_result(r) << "\n";
      return kOk;
    }

    if (c.format == "csv" && !code->parsed()) {
      throw Error(Errc::InvalidArgument, "csv output exists for code-report only");
    }
    const auto F = make_field(c);
    if (verify->parsed()) {
      emit_json(c, cmd_verify_scattered(*F, c.k, cfg));
    } else if (witness->parsed()) {
      emit_json(c, cmd_witness(*F, c.k, cfg));
    } else if (baer->parsed()) {
      emit_json(c, cmd_baer_check(*F, c.k, cfg));
    } else if (code->parsed()) {
      const auto rep = cmd_code_report(*F, c.k, code_poly, !skip_idealisers, cfg);
      if (c.format == "csv") {
        emit(c, distribution_csv(rep.distribution));
      } else {
        emit_json(c, rep.report);
      }
    } else if (equiv->parsed()) {
      if (!k_list.empty()) {
        for (unsigned k : parse_uint_list(k_list)) {
          req.left.push_back("psi:" + std::to_string(k));
          req.right.push_back("psi:" + std::to_string(k));
        }
      }
      if (req.left.empty() || req.right.empty()) throw Error(Errc::InvalidArgument, "equiv needs --left and --right or --k-list");
      req.with_automorphisms = !gl_only;
      emit_json(c, cmd_equivalence(*F, req, cfg));
    } else if (geometry->parsed()) {
      emit_json(c, cmd_geometry(*F, c.k, !no_projection, cfg));
    } else if (lset->parsed()) {
      emit_json(c, cmd_linear_set(*F, lset_poly, with_points, cfg));
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
