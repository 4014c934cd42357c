#include "futaki/corpus.hpp"

#include <algorithm>
#include <fstream>

#include "futaki/errors.hpp"

namespace futaki {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kJobSuffix = ".job.json";
constexpr std::string_view kGoldenSuffix = ".expected.json";

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string to_string(CorpusStatus s) {
  switch (s) {
    case CorpusStatus::pass: return "pass";
    case CorpusStatus::fail: return "FAIL";
    case CorpusStatus::fresh: return "new";
    case CorpusStatus::error: return "ERROR";
  }
  return "?";
}

int CorpusSummary::exit_code() const {
  if (failed > 0) return 2;
  if (errors > 0) return 1;
  if (fresh > 0) return 3;
  return 0;
}

std::vector<std::string> compare_golden(const nlohmann::json& expected, const nlohmann::json& actual) {
  std::vector<std::string> out;
  for (const auto& [key, want] : expected.items()) {
    if (!actual.contains(key)) {
      out.push_back(key + ": missing from report");
    } else if (actual.at(key) != want) {
      out.push_back(key + ": got " + actual.at(key).dump() + ", expected " + want.dump());
    }
  }
  return out;
}

CorpusSummary run_corpus(const fs::path& dir, bool write_missing) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir.string());
  std::vector<fs::path> jobs;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && ends_with(e.path().filename().string(), kJobSuffix)) jobs.push_back(e.path());
  }
  std::sort(jobs.begin(), jobs.end());

  CorpusSummary summary;
  for (const auto& job_path : jobs) {
    const std::string file = job_path.filename().string();
    CorpusEntry entry;
    entry.name = file.substr(0, file.size() - kJobSuffix.size());
    const fs::path golden = dir / (entry.name + std::string(kGoldenSuffix));
    try {
      const auto analysis = analyze(load_job(job_path));
      const auto fields = golden_fields(analysis);
      const nlohmann::json actual = fields;
      if (!analysis.verdicts.ok()) {
        entry.status = CorpusStatus::fail;
        entry.mismatches.push_back("verdict: " + analysis.stability.independence.message);
      } else if (!fs::exists(golden)) {
        entry.status = CorpusStatus::fresh;
        if (write_missing) std::ofstream(golden) << fields.dump(2) << '\n';
      } else {
        std::ifstream in(golden);
        nlohmann::json expected;
        in >> expected;
        entry.mismatches = compare_golden(expected, actual);
        entry.status = entry.mismatches.empty() ? CorpusStatus::pass : CorpusStatus::fail;
      }
    } catch (const InvariantViolation& e) {
      entry.status = CorpusStatus::fail;
      entry.error = e.what();
    } catch (const std::exception& e) {
      entry.status = CorpusStatus::error;
      entry.error = e.what();
    }
    switch (entry.status) {
      case CorpusStatus::pass: ++summary.passed; break;
      case CorpusStatus::fail: ++summary.failed; break;
      case CorpusStatus::fresh: ++summary.fresh; break;
      case CorpusStatus::error: ++summary.errors; break;
    }
    summary.entries.push_back(std::move(entry));
  }
  return summary;
}

}  // namespace futaki
