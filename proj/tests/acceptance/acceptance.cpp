// Acceptance run: one pass/fail line per criterion, exit status 0 only when
// every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cross_check.hpp"
#include "json.hpp"
#include "qseries/catalog.hpp"
#include "qseries/cli.hpp"
#include "qseries/engine.hpp"
#include "qseries/error.hpp"
#include "qseries/rng.hpp"

using namespace qseries;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double time_limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

QComplex random_complex(Rng& rng, double lo, double hi) {
  const double r = rng.uniform(lo, hi), theta = rng.uniform(0.0, 6.283185307179586);
  return QComplex(r * std::cos(theta), r * std::sin(theta));
}

Outcome qcore_suite() {
  constexpr int kSamples = 200;
  constexpr double kTol = 1e-25;
  Rng rng(2024);
  double worst = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const QComplex a = random_complex(rng, 0.0, 1.5), q = random_complex(rng, 0.1, 0.7);
    const long k = rng.integer(0, 25);
    worst = std::max(worst, relative_error(qpoch_finite(a, q, k + 1), qpoch_finite(a, q, k) * (QComplex(1L) - a * ipow(q, k))));
  }
  for (int i = 0; i < kSamples; ++i) {
    const QComplex a = random_complex(rng, 0.0, 0.9), q = random_complex(rng, 0.1, 0.7);
    const long k = rng.integer(0, 20);
    worst = std::max(worst, relative_error(qpoch_infinite(a, q), qpoch_finite(a, q, k) * qpoch_infinite(a * ipow(q, k), q)));
  }
  for (int i = 0; i < kSamples; ++i) {
    const QComplex a = random_complex(rng, 0.0, 1.5), q = random_complex(rng, 0.1, 0.7);
    const long n = rng.integer(1, 4), k = rng.integer(0, 8);
    QComplex rhs(1L);
    for (long r = 0; r < n; ++r) rhs *= qpoch_finite(a * ipow(q, r), ipow(q, n), k);
    worst = std::max(worst, relative_error(qpoch_finite(a, q, n * k), rhs));
  }
  return {worst <= kTol, "3 x " + std::to_string(kSamples) + " samples, worst rel " + fmt(worst)};
}

Outcome verify_sweep(const std::vector<std::string>& ids, const std::string& dims, int samples, double tol) {
  cli::RunConfig config;
  config.identities = ids;
  config.dims = dims;
  config.samples = samples;
  config.tolerance = tol;
  config.seed = 1;
  config.jobs = 0;
  const cli::Report report = cli::run_verify(config);
  double worst = 0.0;
  std::string failing;
  for (const auto& c : report.cases) {
    worst = std::max(worst, c.rel_error);
    if (c.verdict != "pass" && failing.empty()) failing = " first failure " + c.identity_id + " " + c.dims + " " + c.message;
  }
  const bool pass = report.exit_code() == cli::ExitCode::pass && report.passed() == static_cast<int>(report.cases.size());
  return {pass, std::to_string(report.passed()) + "/" + std::to_string(report.cases.size()) + " cases pass, worst rel " +
                    fmt(worst) + failing};
}

Outcome reduction_chains() {
  double worst = 0.0;
  int points = 0;
  for (const auto& chain : testing::reduction_chains()) {
    const Identity& source = lookup(chain.source);
    const Identity& target = lookup(chain.target);
    for (const auto& s : sample_domain(target, chain.target_dims, derive_seed(1, chain.source), 10)) {
      const auto p = chain.map(s);
      const auto d = testing::compare_sides(source, chain.source_dims, p.params, p.bases, target, chain.target_dims,
                                            s.params, s.bases);
      worst = std::max(worst, d.worst());
      ++points;
    }
  }
  return {worst <= 1e-20, std::to_string(testing::reduction_chains().size()) + " chains, " + std::to_string(points) +
                              " points, worst rel " + fmt(worst)};
}

std::vector<std::string> ramanujan_family() {
  std::vector<std::string> out;
  for (const auto& id : register_all())
    if (id.id.rfind("ram_", 0) == 0) out.push_back(id.id);
  return out;
}

Outcome master_engine() {
  std::ostringstream detail;
  bool pass = true;
  for (const auto& block : engine::shipped_blocks()) {
    const auto h = engine::check_property_H(block, 20, 99);
    pass = pass && h.pass;
    if (!h.pass) detail << block.name << " failed H; ";
  }
  const auto planted = engine::check_property_H(engine::planted_counterexample(), 20, 99);
  pass = pass && !planted.pass;
  detail << "H: 5 shipped pass, planted deviation " << fmt(planted.max_deviation) << "; ";

  const std::vector<std::pair<std::string, std::vector<Dims>>> entries = {
      {"bibasic_heine", {{}}},
      {"master_instance_big", {{{"n1", 1}, {"n2", 1}, {"m", 1}}, {{"n1", 2}, {"n2", 2}, {"m", 2}}}},
      {"master_instance_lauricella", {{{"n", 1}, {"p", 1}, {"m", 1}}, {{"n", 2}, {"p", 2}, {"m", 2}}}},
      {"bibasic_euler", {{}}},
  };
  double worst = 0.0;
  for (const auto& [id, dim_list] : entries) {
    const Identity& entry = lookup(id);
    for (const auto& dims : dim_list) {
      const auto counterpart = testing::engine_counterpart(id, dims);
      for (const auto& s : sample_domain(entry, dims, derive_seed(6, id + dims_to_string(dims)), 5)) {
        const auto p = counterpart.map(s);
        worst = std::max(worst, testing::compare_sides(counterpart.composed.identity, counterpart.composed.dims,
                                                       p.params, p.bases, entry, dims, s.params, s.bases)
                                    .worst());
      }
    }
  }
  pass = pass && worst <= 1e-18;
  detail << "engine vs catalog worst rel " << fmt(worst);
  return {pass, detail.str()};
}

std::string stripped_report(const cli::Report& report) {
  std::ostringstream out;
  cli::write_report(report, cli::ReportFormat::json_lines, out);
  std::istringstream in(out.str());
  std::string line, result;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    j.erase("timestamp");
    j.erase("wall_ms");
    result += j.dump() + "\n";
  }
  return result;
}

Outcome determinism() {
  cli::RunConfig config;
  config.all = true;
  config.seed = 7;
  config.jobs = 0;
  const std::string first = stripped_report(cli::run_verify(config));
  const std::string second = stripped_report(cli::run_verify(config));
  return {first == second, "two --all runs, " + std::to_string(first.size()) + " bytes each after dropping timing"};
}

Outcome truncation_honesty() {
  TruncationPolicy base;
  TruncationPolicy doubled = base;
  doubled.max_shell = 2 * base.max_shell;
  // Push the stopping rule below working precision so the longer run keeps
  // summing until the terms no longer change the value.
  doubled.tail_ratio_tol = 1e-40;
  int cases = 0, sides = 0;
  double worst_margin = 0.0;
  bool pass = true;
  std::string first;
  for (const auto& id : register_all()) {
    for (int value : {1, 2}) {
      Dims dims;
      for (const auto& name : id.dim_names) dims[name] = value;
      if (value == 2 && id.dim_names.empty()) continue;
      for (const auto& s : sample_domain(id, dims, derive_seed(8, id.id), 2)) {
        const auto r = verify(id, s.params, s.bases, base, 1e-18);
        if (!r.pass) continue;
        ++cases;
        for (bool left : {true, false}) {
          const SeriesSide side = left ? id.lhs(dims) : id.rhs(dims);
          const auto longer = evaluate(side, s.params, s.bases, doubled);
          const QComplex& v = left ? r.lhs : r.rhs;
          const double bound = (left ? r.lhs_diagnostics : r.rhs_diagnostics).tail_bound;
          const double change = relative_error(longer.value, v);
          ++sides;
          worst_margin = std::max(worst_margin, change / bound);
          if (change > bound) {
            pass = false;
            if (first.empty()) first = " first violation " + id.id + " " + dims_to_string(dims) + " change " + fmt(change) + " bound " + fmt(bound);
          }
        }
      }
    }
  }
  return {pass, std::to_string(cases) + " passing cases, " + std::to_string(sides) +
                    " sides, max change/bound " + fmt(worst_margin) + first};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "qcore functional equation, splitting and duplication", 5.0, qcore_suite},
      {2, "classical identities at 1e-20", 30.0,
       [] {
         return verify_sweep({"q_binomial", "heine_2phi1", "q_euler", "bibasic_heine", "ram_core", "ram_1_4_10",
                              "ram_1_4_17", "ram_1_4_12", "ram_1_4_9"},
                             "1", 10, 1e-20);
       }},
      {3, "A_n theorems over dimensions {1,2}", 600.0,
       [] {
         return verify_sweep({"thm_heine7", "thm_heine8", "thm_heine1", "thm_heine2", "an_qbin_milne_lilly",
                              "an_qbin_gk", "an_qbin_extra_c", "kajihara"},
                             "1,2", 5, 1e-18);
       }},
      {4, "reduction chains at dimension one", 0.0, reduction_chains},
      {5, "Ramanujan-family specializations", 600.0, [] { return verify_sweep(ramanujan_family(), "1,2", 5, 1e-18); }},
      {6, "master theorem engine", 0.0, master_engine},
      {7, "determinism of --all runs", 0.0, determinism},
      {8, "truncation honesty", 0.0, truncation_honesty},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && seconds > c.time_limit_s) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.time_limit_s)) + " s limit";
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %d %s  %s: %s (%.1f s)\n", c.number, o.pass ? "PASS" : "FAIL", c.name.c_str(),
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
