#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "futaki/report.hpp"

namespace futaki {

enum class CorpusStatus { pass, fail, fresh, error };

std::string to_string(CorpusStatus s);

struct CorpusEntry {
  std::string name;  // job file stem without ".job"
  CorpusStatus status = CorpusStatus::error;
  std::vector<std::string> mismatches;  // "field: got X, expected Y"
  std::string error;
};

struct CorpusSummary {
  std::vector<CorpusEntry> entries;  // sorted by job file name
  int passed = 0;
  int failed = 0;
  int fresh = 0;
  int errors = 0;

  /// 0 all pass, 2 any fail, 1 any input error, 3 only new (missing goldens).
  int exit_code() const;
};

/// Job files are `<name>.job.json`; goldens sit next to them as
/// `<name>.expected.json`. With `write_missing`, absent goldens are created
/// from the current results (still reported as new).
CorpusSummary run_corpus(const std::filesystem::path& dir, bool write_missing = false);

/// Field-by-field exact comparison; returns the mismatch descriptions.
std::vector<std::string> compare_golden(const nlohmann::json& expected, const nlohmann::json& actual);

}  // namespace futaki
