#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qseries/cli.hpp"
#include "qseries/error.hpp"

using namespace qseries;
using namespace qseries::cli;

namespace {

Errc error_code(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::domain_empty;
}

std::string render(const Report& r, ReportFormat f) {
  std::ostringstream out;
  write_report(r, f, out);
  return out.str();
}

RunConfig qbin_config() {
  RunConfig c;
  c.identities = {"q_binomial"};
  c.samples = 5;
  c.seed = 1;
  return c;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("format names") {
  CHECK(parse_format("json-lines") == ReportFormat::json_lines);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK(to_string(ReportFormat::text) == "text");
  CHECK(error_code([] { parse_format("xml"); }) == Errc::invalid_config);
}

TEST_CASE("dimension specs") {
  CHECK(expand_dims("1", {}).size() == 1);
  CHECK(expand_dims("1,2", {"n", "m"}).size() == 4);
  const auto named = expand_dims("n=2", {"n", "m"});
  REQUIRE(named.size() == 1);
  CHECK(named[0].at("n") == 2);
  CHECK(named[0].at("m") == 1);
  CHECK(expand_dims("n=1,n=3,m=2", {"n", "m"}).size() == 2);
  CHECK(error_code([] { expand_dims("0", {"n"}); }) == Errc::invalid_config);
  CHECK(error_code([] { expand_dims("n=x", {"n"}); }) == Errc::invalid_config);
}

TEST_CASE("config validation and JSON overrides") {
  RunConfig c = qbin_config();
  CHECK_NOTHROW(c.validate());
  apply_config_json(c, R"({"samples": 3, "seed": 9, "tol": 1e-22, "report": "csv", "max_shell": 55})");
  CHECK(c.samples == 3);
  CHECK(c.seed == 9);
  CHECK(c.tolerance == doctest::Approx(1e-22));
  CHECK(c.format == ReportFormat::csv);
  CHECK(c.policy.max_shell == 55);
  CHECK(error_code([&] { apply_config_json(c, R"({"bogus": 1})"); }) == Errc::invalid_config);
  CHECK(error_code([&] { apply_config_json(c, "not json"); }) == Errc::invalid_config);

  RunConfig back;
  apply_config_json(back, config_to_json(c));
  CHECK(config_to_json(back) == config_to_json(c));

  RunConfig bad = qbin_config();
  bad.precision = 32;
  CHECK(error_code([&] { bad.validate(); }) == Errc::invalid_config);
  bad = qbin_config();
  bad.samples = 0;
  CHECK(error_code([&] { bad.validate(); }) == Errc::invalid_config);
  bad = qbin_config();
  bad.tolerance = 0.0;
  CHECK(error_code([&] { bad.validate(); }) == Errc::invalid_config);
  bad = qbin_config();
  bad.identities.clear();
  CHECK(error_code([&] { run_verify(bad); }) == Errc::invalid_config);
}

TEST_CASE("q_binomial run passes") {
  const Report r = run_verify(qbin_config());
  CHECK(r.cases.size() == 5);
  CHECK(r.passed() == 5);
  CHECK(r.exit_code() == ExitCode::pass);
  REQUIRE(r.identities.size() == 1);
  CHECK(r.identities[0].passed == 5);
  CHECK(r.identities[0].worst_rel_error < 1e-25);
}

TEST_CASE("unknown identity is a configuration error") {
  RunConfig c = qbin_config();
  c.identities = {"nonexistent"};
  CHECK(error_code([&] { run_verify(c); }) == Errc::unknown_identity);
}

TEST_CASE("an impossible tolerance fails") {
  RunConfig c = qbin_config();
  c.tolerance = 1e-300;
  c.samples = 2;
  const Report r = run_verify(c);
  CHECK(r.failed() == 2);
  CHECK(r.exit_code() == ExitCode::failures);
}

TEST_CASE("reports are deterministic across job counts") {
  RunConfig c;
  c.identities = {"thm_heine7", "q_euler", "ram_1_4_9a"};
  c.dims = "1,2";
  c.samples = 2;
  c.seed = 5;
  const Report one = run_verify(c);
  c.jobs = 4;
  const Report four = run_verify(c);
  REQUIRE(one.cases.size() == four.cases.size());
  for (std::size_t i = 0; i < one.cases.size(); ++i) {
    CHECK(one.cases[i].identity_id == four.cases[i].identity_id);
    CHECK(one.cases[i].dims == four.cases[i].dims);
    CHECK(one.cases[i].lhs.re == four.cases[i].lhs.re);
    CHECK(one.cases[i].rhs.im == four.cases[i].rhs.im);
  }
}

TEST_CASE("report formats") {
  const Report r = run_verify(qbin_config());
  std::istringstream lines(render(r, ReportFormat::json_lines));
  std::string line;
  int cases = 0;
  std::string last_type;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    last_type = j.at("type");
    if (last_type == "case") {
      ++cases;
      CHECK(j.at("lhs").at("re").get<std::string>().size() >= 40);
    }
  }
  CHECK(cases == 5);
  CHECK(last_type == "summary");

  const std::string csv = render(r, ReportFormat::csv);
  CHECK(csv.rfind("id,dims,sample,verdict", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(render(r, ReportFormat::text).find("status ok") != std::string::npos);
}

TEST_CASE("compose runs") {
  RunConfig c;
  c.samples = 2;
  c.assignment = engine::parse_assignment(R"({"blocks":[{"block":"q_binomial"}],"base":{"block":"q_binomial"}})");
  const Report ok = run_compose(c);
  CHECK(ok.passed() == 2);
  CHECK(ok.exit_code() == ExitCode::pass);

  c.assignment =
      engine::parse_assignment(R"({"blocks":[{"block":"planted_counterexample"}],"base":{"block":"q_binomial"}})");
  const Report bad = run_compose(c);
  CHECK(bad.status == "property-H-failed");
  CHECK(bad.cases.empty());
  CHECK(bad.exit_code() == ExitCode::property_h_failed);
}

TEST_CASE("decimal digits") {
  CHECK(decimal_digits(128) == 41);
  CHECK(decimal_digits(64) == 22);
}

}  // TEST_SUITE
