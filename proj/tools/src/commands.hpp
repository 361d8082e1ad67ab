#pragma once

#include "report.hpp"

#include "linset/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linset::app {

struct RunConfig {
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;
};

json cmd_verify_scattered(const FieldCtx& F, unsigned k, const RunConfig& cfg);
json cmd_witness(const FieldCtx& F, unsigned k, const RunConfig& cfg);
json cmd_baer_check(const FieldCtx& F, unsigned k, const RunConfig& cfg);

struct CodeReport {
  json report;
  RankDistribution distribution;
};
/// `poly` overrides psi^(k) when given.
CodeReport cmd_code_report(const FieldCtx& F, unsigned k, const std::optional<std::string>& poly,
                           bool idealisers, const RunConfig& cfg);

struct EquivRequest {
  std::vector<std::string> left;
  std::vector<std::string> right;
  bool with_automorphisms = true;
};
/// Every left descriptor against every right descriptor (a delta sweep expands to many).
json cmd_equivalence(const FieldCtx& F, const EquivRequest& req, const RunConfig& cfg);

json cmd_geometry(const FieldCtx& F, unsigned k, bool projection, const RunConfig& cfg);
json cmd_linear_set(const FieldCtx& F, const std::string& poly, bool with_points, const RunConfig& cfg);

}  // namespace linset::app
