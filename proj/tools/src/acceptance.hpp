#pragma once

// The acceptance grid: eleven exact checks with wall-clock limits.

#include "linset/field.hpp"
#include "linset/linpoly.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace linset::app {

struct CriterionResult {
  unsigned id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  /// Criterion names to run; empty runs all.
  std::vector<std::string> only;
  /// Extra (p, e, t) fields appended to the scatteredness grid.
  std::vector<FieldSpec> extra_fields;
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;
};

struct AcceptanceSummary {
  std::vector<CriterionResult> results;
  bool invalid_config = false;
  std::string error;

  bool all_passed() const;
};

const std::vector<std::string>& criterion_names();

/// Throws InvalidArgument for unknown names in `only`. Invalid extra fields
/// are reported through `invalid_config` before anything runs.
AcceptanceSummary run_acceptance(const AcceptanceOptions& opts);

/// "PASS  3 witnesses  ...  (0.12 s)"
std::string format_result(const CriterionResult& r, bool with_time = true);

/// The 20 deterministic (f, g) pairs used for the inclusion oracle check.
std::vector<std::pair<LinPoly, LinPoly>> oracle_corpus(const FieldCtx& F);

}  // namespace linset::app
