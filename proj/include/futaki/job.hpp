#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "futaki/polynomial.hpp"
#include "futaki/term_order.hpp"

namespace futaki {

struct JobOptions {
  bool fast_path = true;     // Hilbert series instead of enumeration
  bool cross_check = false;  // run the brute-force oracles alongside
};

/// One analysis request, read from JSON:
///
///   {
///     "num_vars": 3,
///     "generators": ["x0*x2 - x1^2"],
///     "lambda_weights": [2, -1, -1],
///     "m_max": 12,                                      (optional)
///     "options": {"fast_path": true, "cross_check": false} (optional)
///   }
struct JobSpec {
  std::size_t num_vars = 0;
  std::vector<std::string> generators;
  std::vector<std::int64_t> lambda_weights;
  std::optional<int> m_max;
  JobOptions options;

  OneParameterSubgroup lambda() const { return OneParameterSubgroup(lambda_weights); }
};

/// Throws InputError on a missing or ill-typed field.
JobSpec parse_job(const nlohmann::json& j);
JobSpec load_job(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const JobSpec& job);

/// Parses and validates the generators. Parse and homogeneity failures are
/// rethrown as InputError naming the generator index.
Ideal build_ideal(const JobSpec& job);

}  // namespace futaki
