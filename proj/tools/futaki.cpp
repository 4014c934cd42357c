// futaki: Hilbert-point weights, F1 and CM weights of one-parameter
// degenerations of projective schemes.
//
//   futaki analyze <job.json>
//   futaki verify  <job.json> --m-from A --m-to B
//   futaki oracle  <job.json> --m M
//   futaki corpus  <dir>
//
// Exit codes: 0 ok, 1 bad input, 2 invariant violation, 3 corpus has new
// jobs without goldens.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "futaki/corpus.hpp"
#include "futaki/errors.hpp"
#include "futaki/report.hpp"

namespace {

using namespace futaki;

struct GlobalFlags {
  bool no_fast_path = false;
  bool cross_check = false;
};

JobSpec load_with_flags(const std::string& path, const GlobalFlags& flags) {
  JobSpec job = load_job(path);
  if (flags.no_fast_path) job.options.fast_path = false;
  if (flags.cross_check) job.options.cross_check = true;
  return job;
}

int cmd_analyze(const std::string& path, const GlobalFlags& flags) {
  const auto a = analyze(load_with_flags(path, flags));
  std::cout << to_json(a).dump(2) << '\n';
  if (!a.verdicts.ok()) {
    std::cerr << "invariant violation: " << a.stability.independence.message << '\n';
    return 2;
  }
  return 0;
}

int cmd_verify(const std::string& path, long m_from, long m_to, std::optional<long> fault, const GlobalFlags& flags) {
  Analysis a = analyze(load_with_flags(path, flags));
  const long onset = std::max(a.weights.onset_m0, a.hilbert.onset_m0);
  if (m_to < m_from) throw InputError("--m-to must be >= --m-from");
  if (m_from < onset) {
    const long width = m_to - m_from;
    std::cerr << "warning: m_from = " << m_from << " is below the onset " << onset << "; using [" << onset << ", "
              << onset + width << "]\n";
    m_from = onset;
    m_to = onset + width;
  }
  const int n = a.stability.n;
  extend_weights(a, m_to + n + 1);
  if (fault) a.weights.values[*fault] += 1;

  IndependenceInputs in{&a.weights.values, n, a.stability.mu, a.stability.a_top, a.stability.a_sub,
                        a.stability.w_cm, onset};
  const auto r = verify_m_independence(in, m_from, m_to);

  std::cout << std::left << std::setw(6) << "m" << std::setw(14) << "L1" << std::setw(14) << "L2" << "A(m)\n";
  for (const auto& row : r.rows) {
    std::cout << std::setw(6) << row.m << std::setw(14) << row.L1.get_str() << std::setw(14) << row.L2.get_str()
              << row.total.str() << '\n';
  }
  std::cout << "target (n+1)!(2a_n - mu a_{n+1}) = " << r.target.str() << '\n';
  std::cout << "cm weight 2d(n+1)F1 = " << a.stability.w_cm.str() << '\n';
  std::cout << "verdict: " << (r.pass ? "pass" : "FAIL") << " (" << r.message << ")\n";
  return r.pass ? 0 : 2;
}

int cmd_oracle(const std::string& path, int m, const GlobalFlags& flags) {
  const JobSpec job = load_with_flags(path, flags);
  const auto limit = flat_limit(build_ideal(job), job.lambda());
  const auto dump = brute_force_dump(limit.lead, job.lambda(), m);

  nlohmann::ordered_json j;
  j["m"] = m;
  j["lead_ideal"] = limit.lead.str();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : dump.rows) rows.push_back({{"monomial", row.monomial.str()}, {"weight", std::to_string(row.weight)}});
  j["rows"] = rows;
  j["count"] = std::to_string(dump.count);
  j["weight_total"] = std::to_string(dump.weight_sum);
  j["hilbert_weight"] = std::to_string(dump.hilbert_weight);

  const bool hf_ok = dump.count == hilbert_function(limit.lead, m);
  const bool w_ok = dump.hilbert_weight == hilbert_weight(limit.lead, job.lambda(), m);
  j["matches_pipeline"] = hf_ok && w_ok;
  std::cout << j.dump(2) << '\n';
  return hf_ok && w_ok ? 0 : 2;
}

int cmd_corpus(const std::string& dir, bool write_missing) {
  const auto summary = run_corpus(dir, write_missing);
  for (const auto& e : summary.entries) {
    std::cout << std::left << std::setw(7) << to_string(e.status) << e.name;
    if (!e.error.empty()) std::cout << "  (" << e.error << ")";
    std::cout << '\n';
    for (const auto& m : e.mismatches) std::cout << "         " << m << '\n';
  }
  std::cout << summary.entries.size() << " jobs: " << summary.passed << " pass, " << summary.failed << " fail, "
            << summary.fresh << " new, " << summary.errors << " error\n";
  return summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-point weights, F1 and CM weights of one-parameter degenerations"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_flag("--no-fast-path", flags.no_fast_path, "Count standard monomials instead of using the Hilbert series");
  app.add_flag("--cross-check", flags.cross_check, "Run brute-force oracles alongside the pipeline");

  std::string job_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report as JSON");
  analyze_cmd->add_option("job", job_path, "Job file")->required();

  long m_from = 0, m_to = 0;
  std::optional<long> fault;
  auto* verify_cmd = app.add_subcommand("verify", "Lift-weight table A(m) over a range of m");
  verify_cmd->add_option("job", job_path, "Job file")->required();
  verify_cmd->add_option("--m-from", m_from, "First m")->required();
  verify_cmd->add_option("--m-to", m_to, "Last m")->required();
  verify_cmd->add_option("--inject-fault", fault, "Add 1 to the cached weight at this m (testing)")->group("");

  int oracle_m = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force standard monomial dump");
  oracle_cmd->add_option("job", job_path, "Job file")->required();
  oracle_cmd->add_option("--m", oracle_m, "Degree")->required()->check(CLI::NonNegativeNumber);

  std::string corpus_dir;
  bool write_missing = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run every <name>.job.json and compare to <name>.expected.json");
  corpus_cmd->add_option("dir", corpus_dir, "Corpus directory")->required();
  corpus_cmd->add_flag("--write-missing", write_missing, "Create goldens for jobs that have none");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(job_path, flags);
    if (*verify_cmd) return cmd_verify(job_path, m_from, m_to, fault, flags);
    if (*oracle_cmd) return cmd_oracle(job_path, oracle_m, flags);
    if (*corpus_cmd) return cmd_corpus(corpus_dir, write_missing);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const StabilizationError& e) {
    std::cerr << "error: " << e.what() << " (try a larger m_max)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
