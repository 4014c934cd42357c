#include "futaki/report.hpp"

#include <chrono>

#include "futaki/errors.hpp"

namespace futaki {

namespace {

nlohmann::ordered_json rationals(const std::vector<Rational>& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

template <typename Map>
nlohmann::ordered_json table(const Map& values) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [m, v] : values) out[std::to_string(m)] = std::to_string(v);
  return out;
}

nlohmann::ordered_json optional_bool(const std::optional<bool>& b) {
  return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr);
}

}  // namespace

bool Verdicts::ok() const {
  return m_independence && route_agreement && flatness.value_or(true) && hilbert_paths.value_or(true) &&
         oracle_totals.value_or(true);
}

void extend_weights(Analysis& a, long m_last) {
  const auto lambda = a.job.lambda();
  for (long m = 0; m <= m_last; ++m) {
    if (!a.weights.values.count(m)) a.weights.values[m] = hilbert_weight(a.limit.lead, lambda, static_cast<int>(m));
  }
}

Analysis analyze(const JobSpec& job, const AnalysisHooks& hooks) {
  const auto start = std::chrono::steady_clock::now();
  Analysis a;
  a.job = job;
  const Ideal ideal = build_ideal(job);
  const auto lambda = job.lambda();
  a.limit = flat_limit(ideal, lambda);
  a.m_max = job.m_max.value_or(default_m_max(a.limit.lead));
  const auto path = job.options.fast_path ? HilbertPath::series : HilbertPath::enumeration;
  a.hilbert = hilbert_polynomial(a.limit.lead, a.m_max, path);
  if (a.hilbert.poly_coeffs.empty()) throw InputError("ideal defines the empty scheme (Hilbert polynomial 0)");
  const int n = a.hilbert.dim_n;
  a.weights = weight_profile(a.limit.lead, lambda, n, a.m_max);

  constexpr int kLiftPoints = 7;
  const long m_from = std::max(a.weights.onset_m0, a.hilbert.onset_m0);
  extend_weights(a, m_from + kLiftPoints - 1 + n + 1);
  if (hooks.corrupt_weight_at) a.weights.values[*hooks.corrupt_weight_at] += 1;

  a.stability = build_stability_report(a.hilbert, a.weights, kLiftPoints);
  a.verdicts.m_independence = a.stability.independence.pass;
  a.verdicts.route_agreement = a.stability.routes_agree;

  if (job.options.cross_check) {
    bool flat = true, paths = true, totals = true;
    const int top = std::min(a.m_max, kFlatnessMaxM);
    for (int m = 0; m <= top; ++m) {
      const auto hf = a.hilbert.values.at(m);
      flat = flat && hilbert_function_linear_algebra(ideal, m) == hf;
      paths = paths && hilbert_function_enumerated(a.limit.lead, m) == hilbert_function(a.limit.lead, m) &&
              hilbert_function_enumerated(a.limit.lead, m) == hf;
      const auto dump = brute_force_dump(a.limit.lead, lambda, m);
      totals = totals && dump.count == hf && dump.hilbert_weight == a.weights.values.at(m);
    }
    a.verdicts.flatness = flat;
    a.verdicts.hilbert_paths = paths;
    a.verdicts.oracle_totals = totals;
  }
  a.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return a;
}

nlohmann::ordered_json golden_fields(const Analysis& a) {
  const auto& s = a.stability;
  nlohmann::ordered_json g;
  g["hilbert_poly"] = rationals(a.hilbert.poly_coeffs);
  g["n"] = s.n;
  g["d"] = s.d;
  g["mu"] = s.mu.str();
  g["a_coeffs"] = rationals(a.weights.a_coeffs);
  g["a_top"] = s.a_top.str();
  g["a_sub"] = s.a_sub.str();
  g["F1"] = s.F1.str();
  g["w_cm"] = s.w_cm.str();
  g["lift_constant"] = s.lift_constant.str();
  g["chow_top"] = s.chow_top.str();
  return g;
}

nlohmann::ordered_json to_json(const Analysis& a, bool include_timing) {
  const auto& s = a.stability;
  nlohmann::ordered_json j;
  j["job"] = to_json(a.job);
  j["m_max"] = a.m_max;

  auto basis = nlohmann::ordered_json::array();
  for (const auto& g : a.limit.basis.generators) basis.push_back(g.str());
  auto forms = nlohmann::ordered_json::array();
  for (const auto& g : a.limit.initial_forms.generators()) forms.push_back(g.str());
  auto lead = nlohmann::ordered_json::array();
  for (const auto& g : a.limit.lead.generators()) lead.push_back(g.str());
  j["flat_limit"] = {{"groebner_basis", basis}, {"initial_forms", forms}, {"lead_ideal", lead}};

  j["hilbert"] = {{"values", table(a.hilbert.values)},
                  {"poly_coeffs", rationals(a.hilbert.poly_coeffs)},
                  {"onset_m0", a.hilbert.onset_m0},
                  {"n", a.hilbert.dim_n},
                  {"d", a.hilbert.degree_d},
                  {"mu", a.hilbert.mu.str()}};
  j["weights"] = {{"values", table(a.weights.values)},
                  {"a_coeffs", rationals(a.weights.a_coeffs)},
                  {"onset_m0", a.weights.onset_m0}};

  auto lift = nlohmann::ordered_json::array();
  for (const auto& row : s.independence.rows) {
    lift.push_back({{"m", row.m}, {"L1", row.L1.get_str()}, {"L2", row.L2.get_str()}, {"A", row.total.str()}});
  }
  j["stability"] = {{"n", s.n},
                    {"d", s.d},
                    {"mu", s.mu.str()},
                    {"a_top", s.a_top.str()},
                    {"a_sub", s.a_sub.str()},
                    {"F1", s.F1.str()},
                    {"F1_expansion", s.F1_expansion ? nlohmann::ordered_json(s.F1_expansion->str()) : nlohmann::ordered_json()},
                    {"w_cm", s.w_cm.str()},
                    {"lift_target", s.independence.target.str()},
                    {"lift_constant", s.lift_constant.str()},
                    {"lift_table", lift},
                    {"chow_top", s.chow_top.str()},
                    {"chow_coupling", s.chow_coupling.str()}};
  j["verdicts"] = {{"m_independence", a.verdicts.m_independence},
                   {"m_independence_detail", s.independence.message},
                   {"route_agreement", a.verdicts.route_agreement},
                   {"flatness", optional_bool(a.verdicts.flatness)},
                   {"hilbert_paths", optional_bool(a.verdicts.hilbert_paths)},
                   {"oracle_totals", optional_bool(a.verdicts.oracle_totals)},
                   {"pass", a.verdicts.ok()}};
  if (include_timing) j["timing"] = {{"elapsed_ms", a.elapsed_ms}};
  return j;
}

}  // namespace futaki
