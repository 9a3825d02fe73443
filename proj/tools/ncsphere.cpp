#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncsphere/errors.hpp"
#include "ncsphere/report.hpp"

namespace {

constexpr int kUsageExit = 3;

struct Flags {
  std::string lambda, lambda_file, pythagorean, preset, checks, out, config, from;
  int degree = 4;
  long budget_ms = 0;
  int workers = 1;
  bool timings = false;
};

void add_run_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--lambda", f.lambda, "JSON array of four unit-circle values");
  cmd->add_option("--lambda-file", f.lambda_file, "file holding the JSON array");
  cmd->add_option("--pythagorean", f.pythagorean, "four entries p:q (or 1, -1), comma separated");
  cmd->add_option("--preset", f.preset, "commutative, three-relations, coarse, generic-sample, plane, two-conics, paired");
  cmd->add_option("--degree", f.degree, "degree bound for rewriting and dimensions");
  cmd->add_option("--checks", f.checks, "comma-separated check ids");
  cmd->add_option("--budget-ms", f.budget_ms, "wall-clock budget per check, 0 for none");
  cmd->add_option("--workers", f.workers, "checks run in parallel");
  cmd->add_option("--out", f.out, "write the JSON report here");
  cmd->add_option("--config", f.config, "TOML file with the same keys");
  cmd->add_flag("--timings", f.timings, "append per-check wall-clock timings");
}

// TOML first, then flags given on the command line.
ncs::RunConfig resolve(const CLI::App* cmd, const Flags& f) {
  ncs::RunConfig c;
  if (!f.config.empty()) c.merge_toml(f.config);
  bool cli_source = cmd->count("--lambda") || cmd->count("--lambda-file") || cmd->count("--pythagorean") ||
                    cmd->count("--preset");
  if (cli_source) c.lambda_json = c.lambda_file = c.pythagorean = c.preset = std::nullopt;
  if (cmd->count("--lambda")) c.lambda_json = f.lambda;
  if (cmd->count("--lambda-file")) c.lambda_file = f.lambda_file;
  if (cmd->count("--pythagorean")) c.pythagorean = f.pythagorean;
  if (cmd->count("--preset")) c.preset = f.preset;
  if (cmd->count("--degree")) c.degree = f.degree;
  if (cmd->count("--budget-ms")) c.budget_ms = f.budget_ms;
  if (cmd->count("--workers")) c.workers = f.workers;
  if (cmd->count("--out")) c.out = f.out;
  if (cmd->count("--checks")) {
    c.checks.clear();
    std::stringstream in(f.checks);
    std::string id;
    while (std::getline(in, id, ','))
      if (!id.empty()) c.checks.push_back(id);
  }
  c.timings = f.timings;
  return c;
}

void write_json(const nlohmann::ordered_json& j, const std::optional<std::string>& path) {
  std::string text = j.dump(2) + "\n";
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + *path);
  out << text;
  if (!out) throw std::runtime_error("error while writing " + *path);
}

nlohmann::json read_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ncs::UsageError("cannot read report " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ncs::UsageError("report " + path + " is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the quadratic algebras of noncommutative three-spheres"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ncs::kToolVersion);

  Flags rel_flags, ver_flags, rep_flags;
  auto* relations = app.add_subcommand("relations", "print the presentation");
  add_run_options(relations, rel_flags);
  auto* verify = app.add_subcommand("verify", "run verification checks");
  add_run_options(verify, ver_flags);
  auto* report = app.add_subcommand("report", "summarize a stored report or run one inline");
  add_run_options(report, rep_flags);
  report->add_option("--from", rep_flags.from, "previously written JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (relations->parsed()) {
      auto c = resolve(relations, rel_flags);
      write_json(ncs::relations_report(c), c.out);
      return 0;
    }
    if (verify->parsed()) {
      auto c = resolve(verify, ver_flags);
      auto outcome = ncs::run_verify(c);
      write_json(outcome.report, c.out);
      std::cerr << ncs::summarize(outcome.report);
      return outcome.exit_code;
    }
    if (report->parsed()) {
      nlohmann::ordered_json r;
      std::optional<std::string> out;
      if (!rep_flags.from.empty()) {
        r = read_report(rep_flags.from);
        if (report->count("--out")) out = rep_flags.out;
      } else {
        auto c = resolve(report, rep_flags);
        r = ncs::run_verify(c).report;
        out = c.out;
      }
      auto problems = ncs::validate_report(r);
      if (!problems.empty()) {
        for (const auto& p : problems) std::cerr << "report: " << p << "\n";
        return kUsageExit;
      }
      if (out) write_json(r, out);
      std::cout << ncs::summarize(r);
      return r.value("command", "") == "verify" ? ncs::exit_code_of(r) : 0;
    }
  } catch (const ncs::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageExit;
}
