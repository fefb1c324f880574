#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qseries/cli.hpp"
#include "qseries/error.hpp"
#include "qseries/version.hpp"

namespace {

using qseries::Errc;
using qseries::Error;
namespace cli = qseries::cli;

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_config, std::string("cannot read ") + what + " '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Flags {
  cli::RunConfig config;
  std::string format = "json-lines";
  std::string config_file;
  std::string assignment;
};

void add_run_flags(CLI::App& cmd, Flags& f) {
  auto& c = f.config;
  cmd.add_option("--dims", c.dims, "dimension values, e.g. 1,2 or n=2,m=1")->capture_default_str();
  cmd.add_option("--samples", c.samples, "sample points per dimension assignment")->capture_default_str();
  cmd.add_option("--seed", c.seed, "sampling seed")->capture_default_str();
  cmd.add_option("--precision", c.precision, "working precision in bits")->capture_default_str();
  cmd.add_option("--max-shell", c.policy.max_shell, "largest shell weight summed")->capture_default_str();
  cmd.add_option("--tail-tol", c.policy.tail_ratio_tol, "early-stop ratio for two consecutive shells")
      ->capture_default_str();
  cmd.add_option("--min-shells", c.policy.min_shells, "shells summed before early stop")->capture_default_str();
  cmd.add_option("--tol", c.tolerance, "relative error tolerance")->capture_default_str();
  cmd.add_option("--report", f.format, "json-lines, csv or text")->capture_default_str();
  cmd.add_option("--out", c.out, "report file (default: standard output)");
  cmd.add_option("--jobs", c.jobs, "worker threads, 0 for one per core")->capture_default_str();
  cmd.add_option("--config", f.config_file, "JSON config file; its fields override flags");
}

void finalize(Flags& f) {
  f.config.format = cli::parse_format(f.format);
  if (!f.assignment.empty()) {
    const bool inline_json = f.assignment.find('{') != std::string::npos;
    f.config.assignment = qseries::engine::parse_assignment(
        inline_json ? f.assignment : read_file(f.assignment, "block assignment"));
  }
  if (!f.config_file.empty()) cli::apply_config_json(f.config, read_file(f.config_file, "config file"));
}

int emit(const cli::Report& report, const cli::RunConfig& config) {
  cli::write_report(report, config);
  if (!report.message.empty()) std::cerr << "qseries: " << report.status << ": " << report.message << '\n';
  return static_cast<int>(report.exit_code());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate and verify multiple basic hypergeometric series identities"};
  app.set_version_flag("--version", std::string(qseries::kVersion));
  app.require_subcommand(1);

  Flags verify_flags;
  auto* verify = app.add_subcommand("verify", "verify catalog identities at sampled points");
  verify->add_option("--identity", verify_flags.config.identities, "identity id (repeatable)");
  verify->add_flag("--all", verify_flags.config.all, "verify every catalog identity");
  add_run_flags(*verify, verify_flags);

  Flags compose_flags;
  auto* compose = app.add_subcommand("compose", "compose blocks into a transformation and verify it");
  compose->add_option("--assignment", compose_flags.assignment, "block assignment JSON file or inline JSON");
  add_run_flags(*compose, compose_flags);

  auto* catalog = app.add_subcommand("catalog", "catalog metadata");
  catalog->require_subcommand(1);
  std::string export_out;
  auto* exporter = catalog->add_subcommand("export", "write the catalog as JSON");
  exporter->add_option("--out", export_out, "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(cli::ExitCode::config_error);
  }

  try {
    if (verify->parsed()) {
      finalize(verify_flags);
      return emit(cli::run_verify(verify_flags.config), verify_flags.config);
    }
    if (compose->parsed()) {
      finalize(compose_flags);
      return emit(cli::run_compose(compose_flags.config), compose_flags.config);
    }
    if (exporter->parsed()) {
      const std::string doc = qseries::export_catalog_json();
      if (export_out.empty()) {
        std::cout << doc << '\n';
      } else {
        std::ofstream file(export_out);
        if (!file) throw Error(Errc::invalid_config, "cannot open '" + export_out + "'");
        file << doc << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "qseries: " << e.what() << '\n';
    const bool config = e.code() == Errc::unknown_identity || e.code() == Errc::invalid_config ||
                        e.code() == Errc::invalid_parameters;
    return static_cast<int>(config ? cli::ExitCode::config_error : cli::ExitCode::failures);
  }
  return 0;
}
