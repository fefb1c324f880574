#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qseries/real.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QSERIES_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<json> parse_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

/// Drops the fields that legitimately differ between runs.
std::string strip_timing(const std::string& text) {
  std::string out;
  for (auto j : parse_lines(text)) {
    j.erase("timestamp");
    j.erase("wall_ms");
    out += j.dump() + "\n";
  }
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qseries_it_" + std::to_string(::getpid()) + "_" + name);
}

void round_trips(const std::string& decimal) {
  const auto digits = static_cast<int>(decimal.find('e') - (decimal[0] == '-' ? 1 : 0) - 1);
  CHECK(digits >= 40);
  CHECK(qseries::Real::parse(decimal).to_string(digits) == decimal);
}

}  // namespace

TEST_CASE("q_binomial passes and exits 0") {
  const auto r = run("verify --identity q_binomial --samples 5 --seed 1");
  CHECK(r.exit_code == 0);
  const auto lines = parse_lines(r.out);
  REQUIRE(!lines.empty());
  CHECK(lines.front().at("type") == "header");
  CHECK(lines.back().at("type") == "summary");
  CHECK(lines.back().at("passed") == 5);
  CHECK(lines.back().at("exit_code") == 0);
}

TEST_CASE("configuration errors exit 2") {
  CHECK(run("verify --identity nonexistent").exit_code == 2);
  CHECK(run("verify --identity q_binomial --precision 16").exit_code == 2);
  CHECK(run("verify --identity q_binomial --bogus-flag").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
  CHECK(run("compose --assignment '{\"blocks\":[]}'").exit_code == 2);
}

TEST_CASE("verification failures exit 1") {
  CHECK(run("verify --identity q_binomial --samples 2 --tol 1e-300").exit_code == 1);
}

TEST_CASE("a non-homogeneous block exits 3") {
  const auto r = run(
      "compose --assignment '{\"blocks\":[{\"block\":\"planted_counterexample\"}],\"base\":{\"block\":\"q_binomial\"}}'");
  CHECK(r.exit_code == 3);
  const auto lines = parse_lines(r.out);
  REQUIRE(!lines.empty());
  CHECK(lines.back().at("status") == "property-H-failed");
}

TEST_CASE("compose reproduces the bibasic Heine transformation") {
  const auto path = temp_file("assignment.json");
  std::ofstream(path) << R"({"blocks":[{"block":"q_binomial"}],"base":{"block":"q_binomial"}})";
  const auto r = run("compose --assignment " + path.string() + " --samples 3");
  CHECK(r.exit_code == 0);
  CHECK(parse_lines(r.out).back().at("passed") == 3);
  std::filesystem::remove(path);
}

TEST_CASE("runs with the same seed are identical apart from timing") {
  const std::string args = "verify --all --samples 1 --seed 17";
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(strip_timing(a.out) == strip_timing(b.out));
  // The worker count only shows up in the embedded config.
  auto without_jobs = [](const std::string& text) {
    auto lines = parse_lines(text);
    lines.front()["config"].erase("jobs");
    std::string out;
    for (const auto& j : lines) out += j.dump() + "\n";
    return strip_timing(out);
  };
  CHECK(without_jobs(a.out) == without_jobs(run(args + " --jobs 3").out));
  const auto c = run("verify --all --samples 1 --seed 18");
  CHECK(strip_timing(a.out) != strip_timing(c.out));
}

TEST_CASE("decimal strings round-trip at full precision") {
  const auto r = run("verify --identity thm_heine7 --dims 2 --samples 2");
  REQUIRE(r.exit_code == 0);
  int checked = 0;
  for (const auto& j : parse_lines(r.out)) {
    if (j.at("type") != "case") continue;
    for (const char* side : {"lhs", "rhs"}) {
      round_trips(j.at(side).at("re"));
      round_trips(j.at(side).at("im"));
    }
    for (const auto& [name, value] : j.at("params").items()) {
      if (value.is_array()) {
        for (const auto& c : value) round_trips(c.at("re"));
      } else {
        round_trips(value.at("re"));
      }
    }
    CHECK(j.at("rel_error").get<double>() <= 1e-18);
    ++checked;
  }
  CHECK(checked == 2);
}

TEST_CASE("a config file overrides flags") {
  const auto path = temp_file("config.json");
  std::ofstream(path) << R"({"samples": 2, "seed": 4, "report": "csv"})";
  const auto r = run("verify --identity q_euler --samples 7 --config " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("id,dims,sample", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  std::filesystem::remove(path);
  std::ofstream(path) << R"({"sample": 2})";
  CHECK(run("verify --identity q_euler --config " + path.string()).exit_code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("text report and output file") {
  const auto path = temp_file("report.txt");
  const auto r = run("verify --identity ram_1_4_9 --samples 2 --report text --out " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("ram_1_4_9") != std::string::npos);
  CHECK(ss.str().find("status ok") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("named dimensions") {
  const auto r = run("verify --identity kajihara --dims n=2,m=1 --samples 1");
  CHECK(r.exit_code == 0);
  const auto lines = parse_lines(r.out);
  CHECK(lines.at(1).at("dims") == "m=1,n=2");
}

TEST_CASE("catalog export") {
  const auto r = run("catalog export");
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("identities").size() == 33);
  CHECK(j.at("identities").at(0).at("id") == "q_binomial");
}
