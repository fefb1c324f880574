#include "qseries/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qseries/error.hpp"
#include "qseries/version.hpp"

namespace qseries::cli {

using nlohmann::ordered_json;

namespace {

constexpr long kMaxPrecision = 4096;
constexpr int kMaxShellLimit = 400;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::invalid_config, "invalid " + what + " '" + text + "'");
}

std::pair<std::string, std::string> decimal(const QComplex& z, int digits) {
  return {z.real().to_string(digits), z.imag().to_string(digits)};
}

ValueRecord value_record(const std::string& name, const std::vector<QComplex>& values, bool is_vector, int digits) {
  ValueRecord r{name, is_vector, {}};
  for (const auto& v : values) r.components.push_back(decimal(v, digits));
  return r;
}

/// One unit of work: a sampled point of an identity, or a sampling failure.
struct Task {
  const Identity* identity;
  Dims dims;
  int sample;
  std::optional<Sample> point;
  std::string error_code, error_message;
};

CaseRecord run_case(const Task& task, const RunConfig& config) {
  const int digits = decimal_digits(config.precision);
  CaseRecord rec;
  rec.identity_id = task.identity->id;
  rec.dims = dims_to_string(task.dims);
  rec.sample = task.sample;
  if (!task.point) {
    rec.verdict = "error";
    rec.status = task.error_code;
    rec.message = task.error_message;
    return rec;
  }
  const Sample& s = *task.point;
  for (const auto& [name, v] : s.params.scalars()) rec.params.push_back(value_record(name, {v}, false, digits));
  for (const auto& [name, v] : s.params.vectors()) rec.params.push_back(value_record(name, v, true, digits));
  std::sort(rec.params.begin(), rec.params.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  rec.bases.push_back(value_record("q", {s.bases.q()}, false, digits));
  rec.bases.push_back(value_record("h", {s.bases.h()}, false, digits));
  rec.bases.push_back(value_record("t", {s.bases.t()}, false, digits));
  if (s.bases.block_count() > 0) {
    std::vector<QComplex> hs;
    for (std::size_t r = 0; r < s.bases.block_count(); ++r) hs.push_back(s.bases.block_h(r));
    rec.bases.push_back(value_record("block_h", hs, true, digits));
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    VerificationResult v = verify(*task.identity, s.params, s.bases, config.policy, config.tolerance);
    auto [lre, lim] = decimal(v.lhs, digits);
    auto [rre, rim] = decimal(v.rhs, digits);
    rec.lhs = {lre, lim, v.lhs_diagnostics};
    rec.rhs = {rre, rim, v.rhs_diagnostics};
    rec.abs_error = v.abs_error;
    rec.rel_error = v.rel_error;
    rec.verdict = v.pass ? "pass" : "fail";
    rec.status = "ok";
  } catch (const Error& e) {
    rec.verdict = "error";
    rec.status = std::string(qseries::to_string(e.code()));
    rec.message = e.detail();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<CaseRecord> run_tasks(const std::vector<Task>& tasks, const RunConfig& config) {
  std::vector<CaseRecord> records(tasks.size());
  int jobs = config.jobs == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : config.jobs;
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    PrecisionScope scope(config.precision);
    for (std::size_t i = next++; i < tasks.size(); i = next++) records[i] = run_case(tasks[i], config);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

void add_samples(std::vector<Task>& tasks, const Identity& identity, const Dims& dims, const RunConfig& config) {
  try {
    auto points = sample_domain(identity, dims, config.seed, config.samples);
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
      tasks.push_back({&identity, dims, i, std::move(points[static_cast<std::size_t>(i)]), {}, {}});
    }
  } catch (const Error& e) {
    tasks.push_back({&identity, dims, 0, std::nullopt, std::string(qseries::to_string(e.code())), e.detail()});
  }
}

Report finish(std::vector<Task> tasks, const RunConfig& config) {
  std::stable_sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.identity->id != b.identity->id) return a.identity->id < b.identity->id;
    return a.dims < b.dims;
  });
  Report report;
  report.tool_version = kVersion;
  report.timestamp = utc_timestamp();
  report.config_json = config_to_json(config);
  report.cases = run_tasks(tasks, config);
  std::map<std::string, IdentitySummary> by_id;
  for (const auto& c : report.cases) {
    auto& s = by_id[c.identity_id];
    s.identity_id = c.identity_id;
    if (c.verdict == "pass") ++s.passed;
    if (c.verdict == "fail") ++s.failed;
    if (c.verdict == "error") ++s.errors;
    if (c.verdict != "error") s.worst_rel_error = std::max(s.worst_rel_error, c.rel_error);
    s.wall_ms += c.wall_ms;
  }
  for (auto& [id, s] : by_id) report.identities.push_back(std::move(s));
  if (report.failed() + report.errors() > 0) report.status = "failed";
  return report;
}

void check_policy(const RunConfig& c) {
  auto bad = [](const std::string& what) { throw Error(Errc::invalid_config, what); };
  if (c.samples < 1) bad("samples must be at least 1");
  if (c.precision < kMinPrecision || c.precision > kMaxPrecision) {
    bad("precision must lie in " + std::to_string(kMinPrecision) + ".." + std::to_string(kMaxPrecision));
  }
  if (c.policy.max_shell < 1 || c.policy.max_shell > kMaxShellLimit) {
    bad("max-shell must lie in 1.." + std::to_string(kMaxShellLimit));
  }
  if (c.policy.min_shells < 1) bad("min-shells must be at least 1");
  if (!(c.policy.tail_ratio_tol >= 0.0)) bad("tail ratio tolerance must be non-negative");
  if (!(c.tolerance > 0.0)) bad("tolerance must be positive");
  if (c.jobs < 0) bad("jobs must be non-negative");
}

}  // namespace

std::string to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::json_lines: return "json-lines";
    case ReportFormat::csv: return "csv";
    case ReportFormat::text: return "text";
  }
  return "json-lines";
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json-lines") return ReportFormat::json_lines;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw Error(Errc::invalid_config, "unknown report format '" + name + "'");
}

void RunConfig::validate() const { check_policy(*this); }

std::string config_to_json(const RunConfig& c) {
  ordered_json j;
  j["identities"] = c.identities;
  j["all"] = c.all;
  j["dims"] = c.dims;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["precision"] = c.precision;
  j["max_shell"] = c.policy.max_shell;
  j["tail_ratio_tol"] = c.policy.tail_ratio_tol;
  j["min_shells"] = c.policy.min_shells;
  j["tol"] = c.tolerance;
  j["report"] = to_string(c.format);
  j["out"] = c.out;
  j["jobs"] = c.jobs;
  if (c.assignment) j["assignment"] = ordered_json::parse(engine::assignment_to_json(*c.assignment));
  return j.dump();
}

void apply_config_json(RunConfig& c, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_config, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::invalid_config, "config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "identities") {
        c.identities = v.is_string() ? std::vector<std::string>{v.get<std::string>()} : v.get<std::vector<std::string>>();
      } else if (key == "all") {
        c.all = v.get<bool>();
      } else if (key == "dims") {
        c.dims = v.get<std::string>();
      } else if (key == "samples") {
        c.samples = v.get<int>();
      } else if (key == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (key == "precision") {
        c.precision = v.get<long>();
      } else if (key == "max_shell") {
        c.policy.max_shell = v.get<int>();
      } else if (key == "tail_ratio_tol") {
        c.policy.tail_ratio_tol = v.get<double>();
      } else if (key == "min_shells") {
        c.policy.min_shells = v.get<int>();
      } else if (key == "tol") {
        c.tolerance = v.get<double>();
      } else if (key == "report") {
        c.format = parse_format(v.get<std::string>());
      } else if (key == "out") {
        c.out = v.get<std::string>();
      } else if (key == "jobs") {
        c.jobs = v.get<int>();
      } else if (key == "assignment") {
        c.assignment = engine::parse_assignment(v.dump());
      } else {
        throw Error(Errc::invalid_config, "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_config, std::string("config field has the wrong type: ") + e.what());
  }
}

std::vector<Dims> expand_dims(const std::string& spec, const std::vector<std::string>& dim_names) {
  std::vector<int> shared;
  std::map<std::string, std::vector<int>> named;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      shared.push_back(parse_int(token, "dimension"));
    } else {
      named[token.substr(0, eq)].push_back(parse_int(token.substr(eq + 1), "dimension"));
    }
  }
  std::vector<Dims> out{Dims{}};
  for (const auto& name : dim_names) {
    std::vector<int> values = named.count(name) ? named[name] : (shared.empty() ? std::vector<int>{1} : shared);
    std::vector<Dims> next;
    for (const auto& d : out) {
      for (int v : values) {
        if (v < 1 || v > kMaxDimension) {
          throw Error(Errc::invalid_config, "dimension values must lie in 1.." + std::to_string(kMaxDimension));
        }
        Dims e = d;
        e[name] = v;
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

int Report::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.verdict == "pass"; }));
}
int Report::failed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.verdict == "fail"; }));
}
int Report::errors() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.verdict == "error"; }));
}

ExitCode Report::exit_code() const {
  if (status == "property-H-failed") return ExitCode::property_h_failed;
  if (status == "config-error" || status == "domain-empty") return ExitCode::config_error;
  if (failed() + errors() > 0) return ExitCode::failures;
  return ExitCode::pass;
}

Report run_verify(const RunConfig& config) {
  config.validate();
  std::vector<const Identity*> selected;
  if (config.all) {
    for (const auto& id : register_all()) selected.push_back(&id);
  } else {
    if (config.identities.empty()) throw Error(Errc::invalid_config, "no identity selected (use --identity or --all)");
    for (const auto& name : config.identities) selected.push_back(&lookup(name));
  }
  PrecisionScope scope(config.precision);
  std::vector<Task> tasks;
  for (const Identity* id : selected) {
    for (const auto& dims : expand_dims(config.dims, id->dim_names)) add_samples(tasks, *id, dims, config);
  }
  return finish(std::move(tasks), config);
}

Report run_compose(const RunConfig& config) {
  config.validate();
  if (!config.assignment) throw Error(Errc::invalid_config, "compose needs a block assignment");
  PrecisionScope scope(config.precision);
  auto failed_report = [&](const char* status, const Error& e) {
    Report r;
    r.tool_version = kVersion;
    r.timestamp = utc_timestamp();
    r.config_json = config_to_json(config);
    r.status = status;
    r.message = e.detail();
    return r;
  };
  std::optional<engine::ComposedIdentity> composed;
  try {
    composed = engine::compose(*config.assignment);
  } catch (const Error& e) {
    if (e.code() == Errc::property_h_violation) return failed_report("property-H-failed", e);
    if (e.code() == Errc::domain_empty) return failed_report("domain-empty", e);
    throw;
  }
  std::vector<Task> tasks;
  add_samples(tasks, composed->identity, composed->dims, config);
  return finish(std::move(tasks), config);
}

int decimal_digits(long precision) {
  return static_cast<int>(std::ceil(static_cast<double>(precision) * std::log10(2.0))) + 2;
}

namespace {

ordered_json values_json(const std::vector<ValueRecord>& values) {
  ordered_json j = ordered_json::object();
  for (const auto& v : values) {
    auto component = [](const auto& c) { return ordered_json{{"re", c.first}, {"im", c.second}}; };
    if (v.is_vector) {
      ordered_json arr = ordered_json::array();
      for (const auto& c : v.components) arr.push_back(component(c));
      j[v.name] = std::move(arr);
    } else {
      j[v.name] = component(v.components.front());
    }
  }
  return j;
}

ordered_json diagnostics_json(const Diagnostics& d) {
  return {{"shells", d.shells},
          {"terms", d.terms},
          {"last_shell_ratio", d.last_shell_ratio},
          {"tail_bound", d.tail_bound},
          {"converged", d.converged}};
}

void write_json_lines(const Report& r, std::ostream& out) {
  ordered_json header;
  header["type"] = "header";
  header["schema_version"] = kReportSchemaVersion;
  header["tool_version"] = r.tool_version;
  header["timestamp"] = r.timestamp;
  header["config"] = ordered_json::parse(r.config_json);
  out << header.dump() << '\n';
  for (const auto& c : r.cases) {
    ordered_json j;
    j["type"] = "case";
    j["id"] = c.identity_id;
    j["dims"] = c.dims;
    j["sample"] = c.sample;
    j["params"] = values_json(c.params);
    j["bases"] = values_json(c.bases);
    if (c.status == "ok") {
      j["lhs"] = {{"re", c.lhs.re}, {"im", c.lhs.im}};
      j["rhs"] = {{"re", c.rhs.re}, {"im", c.rhs.im}};
      j["abs_error"] = c.abs_error;
      j["rel_error"] = c.rel_error;
      j["lhs_diagnostics"] = diagnostics_json(c.lhs.diagnostics);
      j["rhs_diagnostics"] = diagnostics_json(c.rhs.diagnostics);
    }
    j["verdict"] = c.verdict;
    j["status"] = c.status;
    if (!c.message.empty()) j["message"] = c.message;
    out << j.dump() << '\n';
  }
  for (const auto& s : r.identities) {
    ordered_json j;
    j["type"] = "identity";
    j["id"] = s.identity_id;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["errors"] = s.errors;
    j["worst_rel_error"] = s.worst_rel_error;
    j["wall_ms"] = s.wall_ms;
    out << j.dump() << '\n';
  }
  ordered_json summary;
  summary["type"] = "summary";
  summary["cases"] = r.cases.size();
  summary["passed"] = r.passed();
  summary["failed"] = r.failed();
  summary["errors"] = r.errors();
  summary["status"] = r.status;
  if (!r.message.empty()) summary["message"] = r.message;
  summary["exit_code"] = static_cast<int>(r.exit_code());
  out << summary.dump() << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void write_csv(const Report& r, std::ostream& out) {
  out << "id,dims,sample,verdict,status,rel_error,abs_error,lhs_re,lhs_im,rhs_re,rhs_im,lhs_shells,rhs_shells,"
         "lhs_last_shell_ratio,rhs_last_shell_ratio,lhs_tail_bound,rhs_tail_bound,lhs_converged,rhs_converged,message\n";
  for (const auto& c : r.cases) {
    const auto& L = c.lhs.diagnostics;
    const auto& R = c.rhs.diagnostics;
    out << csv_field(c.identity_id) << ',' << csv_field(c.dims) << ',' << c.sample << ',' << c.verdict << ','
        << c.status << ',' << format_double(c.rel_error) << ',' << format_double(c.abs_error) << ',' << c.lhs.re << ','
        << c.lhs.im << ',' << c.rhs.re << ',' << c.rhs.im << ',' << L.shells << ',' << R.shells << ','
        << format_double(L.last_shell_ratio) << ',' << format_double(R.last_shell_ratio) << ','
        << format_double(L.tail_bound) << ',' << format_double(R.tail_bound) << ',' << L.converged << ','
        << R.converged << ',' << csv_field(c.message) << '\n';
  }
}

void write_text(const Report& r, std::ostream& out) {
  out << "qseries " << r.tool_version << "  " << r.timestamp << '\n';
  for (const auto& c : r.cases) {
    out << std::left << std::setw(28) << c.identity_id << ' ' << std::setw(16) << (c.dims.empty() ? "-" : c.dims)
        << " #" << std::setw(3) << c.sample << ' ' << std::setw(5) << c.verdict;
    if (c.status == "ok") {
      out << " rel " << std::scientific << std::setprecision(3) << c.rel_error << std::defaultfloat;
    } else {
      out << ' ' << c.status << ": " << c.message;
    }
    out << '\n';
  }
  for (const auto& s : r.identities) {
    out << std::left << std::setw(28) << s.identity_id << " passed " << s.passed << " failed " << s.failed
        << " errors " << s.errors << " worst " << std::scientific << std::setprecision(3) << s.worst_rel_error
        << std::defaultfloat << '\n';
  }
  out << "status " << r.status;
  if (!r.message.empty()) out << " (" << r.message << ')';
  out << ": " << r.passed() << " passed, " << r.failed() << " failed, " << r.errors() << " errors\n";
}

}  // namespace

void write_report(const Report& report, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::json_lines: write_json_lines(report, out); break;
    case ReportFormat::csv: write_csv(report, out); break;
    case ReportFormat::text: write_text(report, out); break;
  }
}

void write_report(const Report& report, const RunConfig& config) {
  if (config.out.empty()) {
    write_report(report, config.format, std::cout);
    return;
  }
  std::ofstream file(config.out);
  if (!file) throw Error(Errc::invalid_config, "cannot open report file '" + config.out + "'");
  write_report(report, config.format, file);
}

}  // namespace qseries::cli
