#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "futaki/groebner.hpp"
#include "futaki/hilbert.hpp"
#include "futaki/job.hpp"
#include "futaki/oracle.hpp"
#include "futaki/stability.hpp"

namespace futaki {

/// Test-only fault injection: perturbs one cached weight value after the
/// weight polynomial has been fitted.
struct AnalysisHooks {
  std::optional<long> corrupt_weight_at;
};

struct Verdicts {
  bool m_independence = false;
  bool route_agreement = false;
  std::optional<bool> flatness;       // lead-ideal HF vs linear algebra, cross-check only
  std::optional<bool> hilbert_paths;  // series vs enumeration, cross-check only
  std::optional<bool> oracle_totals;  // brute-force dump vs pipeline, cross-check only

  bool ok() const;
};

struct Analysis {
  JobSpec job;
  int m_max = 0;
  FlatLimit limit;
  HilbertProfile hilbert;
  WeightProfile weights;
  StabilityReport stability;
  Verdicts verdicts;
  double elapsed_ms = 0.0;
};

/// parse -> Groebner -> flat limit -> Hilbert profile -> weight profile ->
/// F1, CM weight, lift table, verdicts. Throws InputError for bad input and
/// StabilizationError when m_max is too small. A failed verdict is reported,
/// not thrown.
Analysis analyze(const JobSpec& job, const AnalysisHooks& hooks = {});

/// Highest m checked by the flatness cross-check.
inline constexpr int kFlatnessMaxM = 12;

nlohmann::ordered_json to_json(const Analysis& a, bool include_timing = true);

/// The exact-string fields compared against corpus goldens.
nlohmann::ordered_json golden_fields(const Analysis& a);

/// Extends `a.weights.values` so that every m up to `m_last` is present.
void extend_weights(Analysis& a, long m_last);

}  // namespace futaki
