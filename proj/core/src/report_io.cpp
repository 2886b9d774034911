#include "qsearch/report_io.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qsearch/errors.hpp"

namespace qsearch {

void to_json(nlohmann::json& j, const TrajectoryPoint& p) {
  j = nlohmann::json{{"m", p.m}, {"k", p.k}, {"l", p.l}, {"prob", p.prob}};
}

void to_json(nlohmann::json& j, const RunReport& report) {
  j = nlohmann::json{
      {"sampled_index", report.sampled_index},
      {"success", report.success},
      {"iterations", report.iterations},
      {"oracle_calls", report.oracle_calls},
      {"success_probability", report.success_probability},
  };
  if (report.trajectory) j["trajectory"] = *report.trajectory;
}

void to_json(nlohmann::json& j, const DegeneracyResult& result) {
  j = nlohmann::json{
      {"found", result.found.has_value()},
      {"index", result.found ? nlohmann::json(*result.found) : nlohmann::json(nullptr)},
      {"range", result.range ? nlohmann::json(*result.range) : nlohmann::json(nullptr)},
      {"runs", result.runs},
      {"oracle_calls", result.oracle_calls},
      {"verifications", result.verifications},
  };
}

void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryPoint> points) {
  out << "m,k,l,prob\n";
  for (const auto& p : points) fmt::print(out, "{},{},{},{}\n", p.m, p.k, p.l, p.prob);
}

void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryPoint> points,
                          std::span<const TrajectoryRecord> model) {
  if (model.size() != points.size()) throw ConfigError("model and simulation lengths differ");
  out << "m,k,l,prob,k_model,l_model\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    fmt::print(out, "{},{},{},{},{},{}\n", p.m, p.k, p.l, p.prob, model[i].k_model,
               model[i].l_model);
  }
}

ScalingRow scaling_row(unsigned n, std::uint64_t trials, std::uint64_t seed) {
  ScalingRow row;
  row.n = n;
  row.states = std::uint64_t{1} << n;
  Rng pick(seed ^ n);
  const BasisIndex target[] = {uniform_below(pick, row.states)};
  const Oracle oracle = Oracle::from_targets(n, target);
  row.classical_mean_probes = mean_classical_probes(oracle, trials, seed ^ n);
  row.grover_iterations = optimal_iterations(row.states, 1);
  row.success_prob = success_probability(evolve(oracle, row.grover_iterations), oracle);
  return row;
}

void to_json(nlohmann::json& j, const ScalingRow& row) {
  j = nlohmann::json{{"n", row.n},
                     {"N", row.states},
                     {"classical_mean_probes", row.classical_mean_probes},
                     {"grover_iterations", row.grover_iterations},
                     {"success_prob", row.success_prob}};
}

void write_scaling_csv(std::ostream& out, std::span<const ScalingRow> rows) {
  out << "n,N,classical_mean_probes,grover_iterations,success_prob\n";
  for (const auto& r : rows) {
    fmt::print(out, "{},{},{},{},{}\n", r.n, r.states, r.classical_mean_probes,
               r.grover_iterations, r.success_prob);
  }
}

}  // namespace qsearch
