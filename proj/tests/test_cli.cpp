#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FUTAKI_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string corpus(const char* name) { return (fs::path(FUTAKI_CORPUS_DIR) / name).string(); }

fs::path scratch(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / ("futaki_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(p) << text;
  return p;
}

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) n += line.find(needle) != std::string::npos;
  return n;
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run("analyze " + corpus("conic_two_lines.job.json"));
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["stability"]["F1"] == "-3/8");
  CHECK(j["stability"]["w_cm"] == "-3/1");
  CHECK(j["stability"]["lift_constant"] == "-3/1");
  CHECK(j["verdicts"]["pass"] == true);

  r = run("analyze " + corpus("conic_stabilizer.job.json"));
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["stability"]["F1"] == "0/1");

  r = run("--cross-check --no-fast-path analyze " + corpus("twisted_cubic_corner.job.json"));
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["verdicts"]["flatness"] == true);
  CHECK(j["job"]["options"]["fast_path"] == false);

  const auto bad = scratch("inhom.json", R"({"num_vars": 3, "generators": ["x0 + x1*x2"], "lambda_weights": [1, 0, 0]})");
  CHECK(run("analyze " + bad.string()).code == 1);
  const auto junk = scratch("junk.json", "{not json");
  CHECK(run("analyze " + junk.string()).code == 1);
  CHECK(run("analyze /nonexistent.json").code == 1);
  CHECK(run("frobnicate").code == 1);
  fs::remove(bad);
  fs::remove(junk);
}

TEST_CASE("verify") {
  auto r = run("verify " + corpus("conic_two_lines.job.json") + " --m-from 2 --m-to 8");
  CHECK(r.code == 0);
  CHECK(count_lines_with(r.out, " -3/1") == 7 + 3);  // rows, target, cm weight, verdict
  CHECK(r.out.find("verdict: pass") != std::string::npos);

  const auto zero = scratch("zero.json", R"({"num_vars": 3, "generators": ["x0*x2 - x1^2"], "lambda_weights": [0, 0, 0]})");
  r = run("verify " + zero.string() + " --m-from 2 --m-to 8");
  CHECK(r.code == 0);
  CHECK(count_lines_with(r.out, "0/1") == 7 + 3);
  fs::remove(zero);

  r = run("verify " + corpus("conic_two_lines.job.json") + " --m-from 2 --m-to 8 --inject-fault 4");
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL") != std::string::npos);

  r = run("verify " + corpus("quadric_surface_planes.job.json") + " --m-from 0 --m-to 6");
  CHECK(r.code == 0);
}

TEST_CASE("oracle") {
  auto r = run("oracle " + corpus("conic_two_lines.job.json") + " --m 2");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 5);
  CHECK(j["weight_total"] == "-1");
  CHECK(j["hilbert_weight"] == "1");
  CHECK(j["matches_pipeline"] == true);

  r = run("oracle " + corpus("conic_two_lines.job.json") + " --m 0");
  j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["monomial"] == "1");
  CHECK(j["weight_total"] == "0");

  const auto unit = scratch("unit.json", R"({"num_vars": 3, "generators": ["1"], "lambda_weights": [1, 0, 0]})");
  r = run("oracle " + unit.string() + " --m 3");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["rows"].empty());
  fs::remove(unit);

  CHECK(run("oracle " + corpus("conic_two_lines.job.json") + " --m 3000").code == 1);
}

TEST_CASE("corpus") {
  auto r = run("corpus " + std::string(FUTAKI_CORPUS_DIR));
  CHECK(r.code == 0);
  CHECK(r.out.find("0 fail") != std::string::npos);

  const auto empty = fs::temp_directory_path() / ("futaki_cli_empty_" + std::to_string(::getpid()));
  fs::create_directories(empty);
  r = run("corpus " + empty.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("0 jobs") != std::string::npos);
  fs::remove_all(empty);
}
