#include "commands.hpp"

#include "spec_parse.hpp"

#include "linset/arith.hpp"
#include "linset/geometry.hpp"
#include "linset/linear_set.hpp"
#include "linset/rank_code.hpp"
#include "linset/scattered.hpp"

#include <numeric>

namespace linset::app {

json cmd_verify_scattered(const FieldCtx& F, unsigned k, const RunConfig& cfg) {
  const auto psi = build_psi(F, k);
  const auto fib = is_scattered_fibers(psi.poly, cfg.workers);
  const auto rk = is_scattered_ranks(psi.poly, cfg.workers);
  const bool pred = theorem_predicate(F.q(), F.t(), k);

  json out = report_header(F, "verify-scattered");
  out["k"] = k;
  out["poly"] = poly_json(psi.poly);
  out["theorem_predicate"] = pred;
  out["fibers"] = verdict_json(F, fib);
  out["ranks"] = verdict_json(F, rk);
  out["scattered"] = fib.scattered;
  out["agree"] = fib.scattered == rk.scattered && fib.scattered == pred;
  if (!fib.scattered) {
    if (auto w = nonscattered_witness_search(psi.poly)) {
      out["witness"] = {{"rho", felt_json(F, w->rho)}, {"x", felt_json(F, w->x)},
                        {"verified", verify_rho_witness(psi.poly, *w)}};
    }
  }
  return out;
}

json cmd_witness(const FieldCtx& F, unsigned k, const RunConfig&) {
  const auto psi = build_psi(F, k);
  json out = report_header(F, "witness");
  out["k"] = k;
  if (auto w = nonscattered_witness_search(psi.poly)) {
    out["rho_witness"] = {{"rho", felt_json(F, w->rho)}, {"x", felt_json(F, w->x)},
                          {"verified", verify_rho_witness(psi.poly, *w)}};
  } else {
    out["rho_witness"] = nullptr;
  }
  if (auto x = w_unity_root_exists(F, k)) {
    out["w_unity_root"] = felt_json(F, *x);
  } else {
    out["w_unity_root"] = nullptr;
  }
  return out;
}

json cmd_baer_check(const FieldCtx& F, unsigned k, const RunConfig&) {
  const auto rep = baer_partition_check(build_psi(F, k));
  json out = report_header(F, "baer-check");
  out["k"] = k;
  out["intersection"] = rep.intersection;
  out["fixed_part"] = rep.fixed_part;
  out["w_part"] = rep.w_part;
  out["expected_part"] = rep.expected_part;
  out["parts_disjoint"] = rep.parts_disjoint;
  out["parts_inside_linear_set"] = rep.parts_inside_linear_set;
  out["union_equals_intersection"] = rep.union_equals_intersection;
  out["ok"] = rep.ok();
  return out;
}

CodeReport cmd_code_report(const FieldCtx& F, unsigned k, const std::optional<std::string>& poly,
                           bool idealisers, const RunConfig& cfg) {
  const LinPoly f = poly ? parse_poly(F, *poly).front().poly : build_psi(F, k).poly;
  const RankCode C = build_code(f);
  const auto dist = rank_distribution(C, cfg.workers);
  const unsigned n = F.n();
  const unsigned d = min_rank_distance(dist);

  json out = report_header(F, "code-report");
  if (poly) {
    out["poly_spec"] = *poly;
  } else {
    out["k"] = k;
  }
  out["poly"] = poly_json(f);
  out["degenerate"] = C.degenerate;
  out["parameters"] = {{"m", n}, {"n", n}, {"q", F.q()}, {"d", d}};
  // log_q |C| against the Singleton-like bound n (n - d + 1).
  out["log_q_size"] = C.degenerate ? n : 2 * n;
  out["singleton_exponent"] = d == 0 ? 0 : n * (n - d + 1);
  out["mrd"] = is_mrd(C, dist);
  out["rank_distribution"] = distribution_json(dist);
  out["adjoint_distribution_equal"] = rank_distribution(adjoint_code(C), cfg.workers).counts == dist.counts;
  if (idealisers) {
    out["left_idealiser"] = idealiser_json(idealiser(C, Side::Left));
    out["right_idealiser"] = idealiser_json(idealiser(C, Side::Right));
  }
  return {std::move(out), dist};
}

json cmd_equivalence(const FieldCtx& F, const EquivRequest& req, const RunConfig& cfg) {
  std::vector<PolyTarget> left, right;
  for (const auto& s : req.left) {
    auto v = parse_poly(F, s);
    left.insert(left.end(), v.begin(), v.end());
  }
  for (const auto& s : req.right) {
    auto v = parse_poly(F, s);
    right.insert(right.end(), v.begin(), v.end());
  }
  EquivalenceOptions opts;
  opts.with_automorphisms = req.with_automorphisms;
  opts.budget = cfg.budget;

  json results = json::array();
  json matches = json::array();
  std::uint64_t checked = 0;
  const bool list_all = left.size() * right.size() <= 100;
  for (const auto& l : left) {
    for (const auto& r : right) {
      const auto cert = subspace_equivalent(l.poly, r.poly, opts);
      ++checked;
      json entry{{"left", l.label}, {"right", r.label}, {"equivalent", cert.has_value()}};
      entry["certificate"] = cert ? certificate_json(F, *cert) : json(nullptr);
      if (cert) matches.push_back(entry);
      if (list_all) results.push_back(std::move(entry));
    }
  }
  json out = report_header(F, "equiv");
  out["with_automorphisms"] = req.with_automorphisms;
  out["budget"] = cfg.budget;
  out["checked"] = checked;
  out["equivalent_count"] = matches.size();
  out["matches"] = std::move(matches);
  if (list_all) out["results"] = std::move(results);
  return out;
}

json cmd_geometry(const FieldCtx& F, unsigned k, bool projection, const RunConfig& cfg) {
  const unsigned n = F.n();
  const ProjSubspace gamma = gamma_k(F, k);
  json out = report_header(F, "geometry");
  out["k"] = k;
  json eq = json::array();
  for (std::size_t r = 0; r < gamma.equations().rows(); ++r) {
    json row = json::array();
    for (Felt c : gamma.equations().row(r)) row.push_back(felt_json(F, c));
    eq.push_back(std::move(row));
  }
  out["equations"] = std::move(eq);
  out["dim"] = gamma.dim();
  const bool disjoint = disjoint_from_subgeometry(gamma);
  out["disjoint_from_subgeometry"] = disjoint;

  json gens = json::array();
  for (unsigned m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    json g{{"m", m}, {"chain_dims", sigma_chain_dims(gamma, m, 3)}};
    if (disjoint) g["intn"] = intn(gamma, m);
    gens.push_back(std::move(g));
  }
  out["sigma_generators"] = std::move(gens);
  out["pseudoregulus_geometric"] = pseudoregulus_geometric_test(gamma);

  if (projection) {
    const auto projected = project_to_line(gamma, k, cfg.workers);
    const auto expected = linear_set(scale(F.from_int(2), build_psi(F, k).poly), cfg.workers).points;
    out["projection"] = {{"size", projected.size()}, {"expected_size", expected.size()},
                         {"matches_linear_set", projected == expected}};
  }
  return out;
}

json cmd_linear_set(const FieldCtx& F, const std::string& poly, bool with_points, const RunConfig& cfg) {
  const auto target = parse_poly(F, poly).front();
  const auto L = linear_set(target.poly, cfg.workers);
  json out = report_header(F, "linear-set");
  out["poly_spec"] = target.label;
  out["poly"] = poly_json(target.poly);
  out["size"] = L.points.size();
  out["maximum_size"] = (F.order() - 1) / (F.q() - 1);
  out["scattered"] = L.points.size() == (F.order() - 1) / (F.q() - 1);
  if (with_points) {
    json pts = json::array();
    for (const auto& p : L.points) pts.push_back(point_json(F, p));
    out["points"] = std::move(pts);
  }
  return out;
}

}  // namespace linset::app
