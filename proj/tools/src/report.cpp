#include "report.hpp"

#include <sstream>

namespace linset::app {

json field_json(const FieldCtx& F) {
  return {
      {"p", F.p()},
      {"e", F.e()},
      {"t", F.t()},
      {"q", F.q()},
      {"n", F.n()},
      {"order", F.order()},
      {"modulus", F.spec().modulus},
      {"backend", F.backend() == Backend::Table ? "table" : "polynomial"},
      {"generator", F.to_index(F.generator())},
  };
}

json report_header(const FieldCtx& F, const std::string& command) {
  return {{"schema", kSchema}, {"command", command}, {"field", field_json(F)}};
}

json felt_json(const FieldCtx& F, Felt x) { return F.to_index(x); }

json poly_json(const LinPoly& f) {
  json out = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f.field().to_index(f[i]));
  return out;
}

json point_json(const FieldCtx& F, const ProjPoint& pt) { return json::array({F.to_index(pt.a), F.to_index(pt.b)}); }

json certificate_json(const FieldCtx& F, const Certificate& c) {
  return {
      {"matrix", json::array({json::array({F.to_index(c.a), F.to_index(c.b)}),
                              json::array({F.to_index(c.c), F.to_index(c.d)})})},
      {"automorphism", c.automorphism},
  };
}

json verdict_json(const FieldCtx& F, const ScatterVerdict& v) {
  json out{{"scattered", v.scattered}};
  if (v.criterion == ScatterCriterion::Fibers) out["distinct_values"] = v.distinct_values;
  if (v.witness) out["witness"] = json::array({F.to_index(v.witness->first), F.to_index(v.witness->second)});
  return out;
}

json distribution_json(const RankDistribution& d) { return d.counts; }

json idealiser_json(const IdealiserReport& r) {
  json out{
      {"side", r.side == Side::Left ? "left" : "right"},
      {"dim_over_p", r.dim_over_p},
      {"dim_over_q", r.dim_over_q},
      {"contains_identity", r.contains_identity},
      {"closed", r.closed},
      {"commutative", r.commutative},
      {"field", r.is_field()},
  };
  if (r.nonzero_invertible) {
    out["nonzero_invertible"] = *r.nonzero_invertible;
  } else {
    out["nonzero_invertible"] = nullptr;
  }
  json basis = json::array();
  for (const auto& b : r.basis) basis.push_back(poly_json(b));
  out["basis"] = std::move(basis);
  return out;
}

std::string distribution_csv(const RankDistribution& d) {
  std::ostringstream out;
  out << "rank,count\n";
  for (std::size_t r = 0; r < d.counts.size(); ++r) out << r << ',' << d.counts[r] << '\n';
  return out.str();
}

}  // namespace linset::app
