#pragma once

#include <optional>
#include <string>
#include <utility>

#include "germ/bounds.hpp"
#include "germ/parser.hpp"

namespace germ {

struct AnalyzeOptions {
  std::string input_label;
  /// Inclusive k range; defaults to [2, n - 1]. Values outside are clamped.
  std::optional<std::pair<int, int>> k_range;
  bool assume_pure_dimensional = false;
  LkExponent lk_exponent = LkExponent::codimension;
  std::size_t budget = 1'000'000;
};

struct AnalysisResult {
  GermReport report;
  /// Set when the requested k range left [2, n - 1]; the report covers the
  /// clamped range.
  std::optional<std::string> k_range_violation;
};

/// Full pipeline: tangent cone, multiplicity, singular locus, bounds.
AnalysisResult analyze(const IdealFile& ideal, const AnalyzeOptions& options = {});

}  // namespace germ
