#pragma once

// JSON and CSV rendering. Field elements are written as their
// polynomial-basis index; every report carries the field it was computed in.

#include "linset/field.hpp"
#include "linset/linear_set.hpp"
#include "linset/linpoly.hpp"
#include "linset/rank_code.hpp"
#include "linset/scattered.hpp"

#include <json.hpp>

#include <string>

namespace linset::app {

using nlohmann::json;

inline constexpr int kSchema = 1;

json field_json(const FieldCtx& F);
/// {"schema": 1, "command": ..., "field": ...}
json report_header(const FieldCtx& F, const std::string& command);

json felt_json(const FieldCtx& F, Felt x);
json poly_json(const LinPoly& f);
json point_json(const FieldCtx& F, const ProjPoint& pt);
json certificate_json(const FieldCtx& F, const Certificate& c);
json verdict_json(const FieldCtx& F, const ScatterVerdict& v);
json distribution_json(const RankDistribution& d);
json idealiser_json(const IdealiserReport& r);

std::string distribution_csv(const RankDistribution& d);

}  // namespace linset::app
