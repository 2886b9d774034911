#pragma once

#include <ostream>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsearch/analysis.hpp"
#include "qsearch/grover.hpp"

namespace qsearch {

// JSON field names match the struct members.
void to_json(nlohmann::json& j, const TrajectoryPoint& p);
void to_json(nlohmann::json& j, const RunReport& report);
void to_json(nlohmann::json& j, const DegeneracyResult& result);

/// Header `m,k,l,prob`, one row per point. Doubles are printed in shortest
/// round-trip form, so output is byte-stable for identical inputs.
void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryPoint> points);

/// `m,k,l,prob,k_model,l_model`: simulation columns followed by the
/// two-level model. `model` must have the same length as `points`.
void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryPoint> points,
                          std::span<const TrajectoryRecord> model);

/// One line of the classical-vs-quantum scaling table.
struct ScalingRow {
  unsigned n = 0;
  std::uint64_t states = 0;
  double classical_mean_probes = 0.0;
  std::uint64_t grover_iterations = 0;
  double success_prob = 0.0;
};

/// Single random target per n (drawn with seed XOR n). Classical column is
/// a Monte Carlo mean over `trials` scans; the quantum column simulates the
/// auto iteration count.
ScalingRow scaling_row(unsigned n, std::uint64_t trials, std::uint64_t seed);

void to_json(nlohmann::json& j, const ScalingRow& row);

/// Header `n,N,classical_mean_probes,grover_iterations,success_prob`.
void write_scaling_csv(std::ostream& out, std::span<const ScalingRow> rows);

}  // namespace qsearch
