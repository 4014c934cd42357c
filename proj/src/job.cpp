#include "futaki/job.hpp"

#include <fstream>

#include "futaki/errors.hpp"
#include "futaki/parser.hpp"

namespace futaki {

JobSpec parse_job(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("job must be a JSON object");
  JobSpec job;
  try {
    const auto nv = j.at("num_vars").get<std::int64_t>();
    if (nv <= 0) throw InputError("num_vars must be positive");
    job.num_vars = static_cast<std::size_t>(nv);
    job.generators = j.at("generators").get<std::vector<std::string>>();
    job.lambda_weights = j.at("lambda_weights").get<std::vector<std::int64_t>>();
    if (j.contains("m_max") && !j.at("m_max").is_null()) {
      const int m = j.at("m_max").get<int>();
      if (m < 0) throw InputError("m_max must be non-negative");
      job.m_max = m;
    }
    if (j.contains("options")) {
      const auto& o = j.at("options");
      job.options.fast_path = o.value("fast_path", true);
      job.options.cross_check = o.value("cross_check", false);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid job: ") + e.what());
  }
  if (job.lambda_weights.size() != job.num_vars) {
    throw InputError("lambda_weights has " + std::to_string(job.lambda_weights.size()) + " entries, num_vars is " +
                     std::to_string(job.num_vars));
  }
  return job;
}

JobSpec load_job(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open job file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("job file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_job(j);
}

nlohmann::ordered_json to_json(const JobSpec& job) {
  nlohmann::ordered_json j;
  j["num_vars"] = job.num_vars;
  j["generators"] = job.generators;
  j["lambda_weights"] = job.lambda_weights;
  if (job.m_max) {
    j["m_max"] = *job.m_max;
  } else {
    j["m_max"] = nullptr;
  }
  j["options"] = {{"fast_path", job.options.fast_path}, {"cross_check", job.options.cross_check}};
  return j;
}

Ideal build_ideal(const JobSpec& job) {
  std::vector<Polynomial> gens;
  gens.reserve(job.generators.size());
  for (std::size_t i = 0; i < job.generators.size(); ++i) {
    try {
      gens.push_back(parse_polynomial(job.generators[i], job.num_vars));
    } catch (const ParseError& e) {
      throw InputError("generator " + std::to_string(i) + ": " + e.what());
    }
  }
  return Ideal(job.num_vars, std::move(gens));
}

}  // namespace futaki
