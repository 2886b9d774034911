// grover-sim: run, scan, verify and benchmark Grover search on a simulated
// state vector.
//
// Exit status: 0 success, 1 verification failure, 2 usage or configuration
// error, 3 numerical integrity error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsearch/analysis.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/report_io.hpp"
#include "qsearch/transforms.hpp"
#include "qsearch/verify_suite.hpp"

namespace {

using namespace qsearch;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIntegrity = 3;

struct CliConfig {
  std::optional<unsigned> n;
  std::vector<BasisIndex> targets;
  std::string table;
  std::optional<std::string> query;
  bool ignore_case = false;
  std::string iterations = "auto";
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  bool capture_trajectory = false;

  std::optional<std::uint64_t> scan_max;
  bool both = false;

  std::vector<std::string> theorems;
  unsigned n_min = 2;
  std::optional<unsigned> n_max;
  unsigned vectors = 200;
  std::uint64_t pairs = 10000;
  std::string inject_fault;

  std::uint64_t trials = 10000;
  unsigned retries = 3;
};

// Writes to --out or stdout.
void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + cfg.out + "'");
  file << text;
}

std::string format_or(const CliConfig& cfg, const std::string& fallback,
                      std::initializer_list<std::string_view> allowed) {
  const std::string format = cfg.format.empty() ? fallback : cfg.format;
  for (const auto a : allowed) {
    if (a == format) return format;
  }
  throw ConfigError("format '" + format + "' is not available for this subcommand");
}

Oracle build_oracle(const CliConfig& cfg, bool allow_empty) {
  if (!cfg.table.empty()) {
    if (!cfg.query) throw ConfigError("--table needs --query");
    const auto oracle = Oracle::from_table(
        RecordTable::load(cfg.table), *cfg.query,
        cfg.ignore_case ? MatchMode::kIgnoreAsciiCase : MatchMode::kExact);
    if (oracle.empty() && !allow_empty) {
      throw ConfigError("no record in '" + cfg.table + "' matches the query");
    }
    return oracle;
  }
  if (!cfg.n) throw ConfigError("--n is required unless --table is given");
  if (cfg.targets.empty() && !allow_empty) {
    throw ConfigError("give at least one --target, or --table with --query");
  }
  return Oracle::from_targets(*cfg.n, cfg.targets);
}

IterationPolicy parse_policy(const std::string& text) {
  if (text == "auto") return IterationPolicy::automatic();
  if (text == "scan") return IterationPolicy::scan();
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw ConfigError("--iterations must be a non-negative integer, 'auto' or 'scan'");
  }
  return IterationPolicy::fixed(value);
}

int cmd_run(const CliConfig& cfg) {
  format_or(cfg, "json", {"json"});
  GroverConfig config{build_oracle(cfg, false), parse_policy(cfg.iterations), cfg.seed,
                      cfg.capture_trajectory};
  const RunReport report = run(config);
  emit(cfg, nlohmann::json(report).dump(2) + "\n");
  return kExitOk;
}

int cmd_scan(const CliConfig& cfg) {
  const std::string format = format_or(cfg, "csv", {"csv", "json"});
  const Oracle oracle = build_oracle(cfg, false);
  const double ratio =
      static_cast<double>(oracle.state_count()) / static_cast<double>(oracle.target_count());
  const std::uint64_t max_m =
      cfg.scan_max.value_or(static_cast<std::uint64_t>(std::ceil(std::sqrt(2.0 * ratio))));
  const GroverConfig config{oracle, IterationPolicy::automatic(), cfg.seed};
  const auto points = trajectory_scan(config, std::max<std::uint64_t>(max_m, 1));

  std::ostringstream out;
  if (cfg.both) {
    const auto model = model_trajectory(oracle.state_count(), oracle.target_count(), points.size() - 1);
    if (format == "csv") {
      write_trajectory_csv(out, points, model);
    } else {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < points.size(); ++i) {
        nlohmann::json row = points[i];
        row["k_model"] = model[i].k_model;
        row["l_model"] = model[i].l_model;
        rows.push_back(std::move(row));
      }
      out << rows.dump(2) << "\n";
    }
  } else if (format == "csv") {
    write_trajectory_csv(out, points);
  } else {
    out << nlohmann::json(points).dump(2) << "\n";
  }
  emit(cfg, out.str());
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg) {
  format_or(cfg, "json", {"json"});
  VerifyOptions options;
  options.n_min = cfg.n_min;
  options.n_max = cfg.n_max.value_or(12);
  options.seed = cfg.seed == 0 ? 1 : cfg.seed;
  options.random_vectors = cfg.vectors;
  options.random_pairs = cfg.pairs;
  for (const auto& key : cfg.theorems) {
    const auto check = parse_check(key);
    if (!check) throw ConfigError("unknown theorem selector '" + key + "'");
    options.checks.push_back(*check);
  }
  if (cfg.inject_fault == "r-sign") {
    options.reflection = [](StateVector& s) {
      reflect_about_zero(s);
      s.amplitudes()[0] = -s.amplitudes()[0];
    };
  } else if (!cfg.inject_fault.empty()) {
    throw ConfigError("unknown fault '" + cfg.inject_fault + "'");
  }

  const SuiteReport report = run_verification(options);
  nlohmann::json j = report;
  j["n_min"] = options.n_min;
  j["n_max"] = options.n_max;
  emit(cfg, j.dump(2) + "\n");
  if (!report.passed()) {
    std::cerr << "verification failed: " << j["first_failure"].dump() << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_bench(const CliConfig& cfg) {
  const std::string format = format_or(cfg, "csv", {"csv", "json"});
  const unsigned n_max = cfg.n_max.value_or(14);
  if (cfg.n_min < 1 || cfg.n_min > n_max) throw ConfigError("bench range needs 1 <= n-min <= n-max");
  std::vector<ScalingRow> rows;
  for (unsigned n = cfg.n_min; n <= n_max; ++n) rows.push_back(scaling_row(n, cfg.trials, cfg.seed));
  std::ostringstream out;
  if (format == "csv") {
    write_scaling_csv(out, rows);
  } else {
    out << nlohmann::json(rows).dump(2) << "\n";
  }
  emit(cfg, out.str());
  return kExitOk;
}

int cmd_degeneracy(const CliConfig& cfg) {
  format_or(cfg, "json", {"json"});
  const Oracle oracle = build_oracle(cfg, true);
  const auto result = degeneracy_search(oracle, {.retries = cfg.retries, .seed = cfg.seed});
  emit(cfg, nlohmann::json(result).dump(2) + "\n");
  return kExitOk;
}

void add_oracle_flags(CLI::App* sub, CliConfig& cfg) {
  auto* n = sub->add_option("--n", cfg.n, "Qubit count (N = 2^n)")->check(CLI::Range(1u, 63u));
  auto* target = sub->add_option("--target", cfg.targets, "Marked basis index; repeat or comma-separate")
                     ->delimiter(',');
  auto* table = sub->add_option("--table", cfg.table, "Record table, one record per line");
  sub->add_option("--query", cfg.query, "Record to search for")->needs(table);
  sub->add_flag("--ignore-case", cfg.ignore_case, "ASCII case-insensitive record match");
  table->excludes(target)->excludes(n);
}

void add_output_flags(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "64-bit RNG seed");
  sub->add_option("--out", cfg.out, "Output file (default stdout)");
  sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover search state-vector simulator"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* run_cmd = app.add_subcommand("run", "Run one search and report the sampled index");
  add_oracle_flags(run_cmd, cfg);
  add_output_flags(run_cmd, cfg);
  run_cmd->add_option("--iterations", cfg.iterations, "Integer, 'auto' or 'scan'");
  run_cmd->add_flag("--trajectory", cfg.capture_trajectory, "Include per-iteration (k, l, prob)");

  auto* scan_cmd = app.add_subcommand("scan", "Target probability after every iteration");
  add_oracle_flags(scan_cmd, cfg);
  add_output_flags(scan_cmd, cfg);
  scan_cmd->add_option("--max", cfg.scan_max, "Last iteration (default ceil(sqrt(2N/M)))");
  scan_cmd->add_flag("--both", cfg.both, "Add two-level model columns");

  auto* verify_cmd = app.add_subcommand("verify", "Check the operator identities and amplitude theorems");
  add_output_flags(verify_cmd, cfg);
  verify_cmd->add_option("--theorem", cfg.theorems, "1, 2, 2.1, 2.2, 3, unitarity, halfway")->delimiter(',');
  verify_cmd->add_option("--n-min", cfg.n_min, "Smallest n")->check(CLI::Range(1u, 40u));
  verify_cmd->add_option("--n-max", cfg.n_max, "Largest n (default 12)")->check(CLI::Range(1u, 40u));
  verify_cmd->add_option("--vectors", cfg.vectors, "Random vectors per n for the diffusion routes");
  verify_cmd->add_option("--pairs", cfg.pairs, "Random (k, l) pairs per n");
  verify_cmd->add_option("--inject-fault", cfg.inject_fault)->group("");

  auto* bench_cmd = app.add_subcommand("bench", "Classical probes vs Grover iterations by n");
  add_output_flags(bench_cmd, cfg);
  bench_cmd->add_option("--n-min", cfg.n_min, "Smallest n")->check(CLI::Range(1u, 40u));
  bench_cmd->add_option("--n-max", cfg.n_max, "Largest n (default 14)")->check(CLI::Range(1u, 40u));
  bench_cmd->add_option("--trials", cfg.trials, "Classical Monte Carlo trials per n");

  auto* degeneracy_cmd = app.add_subcommand("degeneracy", "Search with an unknown number of targets");
  add_oracle_flags(degeneracy_cmd, cfg);
  add_output_flags(degeneracy_cmd, cfg);
  degeneracy_cmd->add_option("--retries", cfg.retries, "Runs per 2^j guess")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(cfg);
    if (scan_cmd->parsed()) return cmd_scan(cfg);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
    if (bench_cmd->parsed()) return cmd_bench(cfg);
    if (degeneracy_cmd->parsed()) return cmd_degeneracy(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BoundsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const TheoremViolation& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIntegrity;
  }
  return kExitConfig;
}
