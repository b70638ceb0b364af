#pragma once

#include "oit/flow.hpp"
#include "oit/instance_io.hpp"
#include "oit/measures.hpp"
#include "oit/semantics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oit {

inline constexpr const char* kToolVersion = "oit 1.0.0";

/// "sha256:<hex>" of the canonical serialization (weights excluded).
std::string instance_digest(const Information& info);

struct ReportDocument {
  std::string instance_digest;
  std::vector<MetricReport> metrics;
};

/// What `metrics` should compute beyond the always-on measure metrics.
struct MetricsRequest {
  WeightTables weights;
  std::optional<Information> target;
  CoverageMode coverage_mode = CoverageMode::Replica;
  CoverageOptions coverage_options;
  std::optional<SemanticMapping> decoder;
  SuitabilityWeights suitability_weights = equal_suitability_weights();
  DistanceKind distance = DistanceKind::Jaccard;
};

/// Notes collected while computing (e.g. coverage skipped because the target
/// is not a sub-information). They belong on the error stream.
struct MetricsResult {
  ReportDocument report;
  std::vector<std::string> notes;
};

/// Counting-measure scope, granularity, sustainability, richness, volume and
/// delay always; weighted variants for every weight table present;
/// coverage and suitability when a target is given; validity with a decoder.
MetricsResult compute_metrics(const Information& info, const MetricsRequest& request);

std::string emit_report_json(const ReportDocument& report);
std::string emit_report_table(const ReportDocument& report);

}  // namespace oit
