#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsearch/oracle.hpp"

namespace qsearch {

/// Exact reduction of the search dynamics: each of the M target states has
/// amplitude k, each of the N - M others has amplitude l.
struct TwoLevelState {
  std::uint64_t states = 0;   ///< N
  std::uint64_t targets = 1;  ///< M
  double k = 0.0;
  double l = 0.0;

  /// Uniform start, k = l = 1/sqrt(N).
  static TwoLevelState uniform(std::uint64_t states, std::uint64_t targets = 1);

  /// Rescales (k, l) so that M k^2 + (N - M) l^2 = 1. Throws ConfigError if
  /// both are zero or N <= M.
  static TwoLevelState normalized(std::uint64_t states, std::uint64_t targets, double k, double l);

  /// M k^2 + (N - M) l^2; equals 1 for a normalized state.
  double weight() const;
};

/// Inversion about average on the two classes: A = (M k + (N - M) l) / N,
/// k' = 2A - k, l' = 2A - l. For M = 1 this is
///   k' = (2/N - 1) k + 2 (N - 1)/N l,   l' = (2/N) k + (N - 2)/N l.
TwoLevelState diffusion_step(const TwoLevelState& s);

/// Phase flip of the targets (k -> -k) followed by diffusion_step.
TwoLevelState grover_iteration_model(const TwoLevelState& s);

struct TrajectoryRecord {
  std::uint64_t m = 0;
  double k_model = 0.0;
  double l_model = 0.0;
  std::optional<double> k_sim;
  std::optional<double> l_sim;
  double delta_k = 0.0;  ///< k_model(m) - k_model(m - 1); 0 at m = 0
  double bound = 0.0;    ///< 1 / (2 sqrt(N))
};

/// Model-only trajectory for m = 0..max_m from the uniform start.
std::vector<TrajectoryRecord> model_trajectory(std::uint64_t states, std::uint64_t targets,
                                               std::uint64_t max_m);

/// Model and full state-vector simulation advanced in the same loop, so
/// every record carries both sides.
std::vector<TrajectoryRecord> compare_trajectory(const Oracle& oracle, std::uint64_t max_m);

/// Outcome of one mechanical check.
struct Verdict {
  Verdict() = default;
  explicit Verdict(std::string name) : theorem(std::move(name)) {}

  std::string theorem;
  bool passed = true;
  std::optional<nlohmann::json> first_violation;
  nlohmann::json params = nlohmann::json::object();

  /// Records `detail` as the first violation if none is set yet.
  void fail(nlohmann::json detail);
};

void to_json(nlohmann::json& j, const Verdict& v);

/// |k_model - k_sim| and |l_model - l_sim| below `tolerance` for every record.
Verdict verify_model_agreement(std::span<const TrajectoryRecord> records, double tolerance = 1e-10);

/// Amplitude growth bound. For each record whose predecessor has
/// 0 < k < 1/sqrt(2) and l > 0: delta_k must exceed 1/(2 sqrt(N)) and l
/// must stay positive. At N = 4 the first round lands exactly on l = 0, so
/// l >= -1e-14 is accepted there.
Verdict verify_growth_bound(std::span<const TrajectoryRecord> records, std::uint64_t states);

/// Sign recovery. Requires k < 0 < l and |k/l| < sqrt(N), otherwise throws
/// ConfigError. Passes when both amplitudes after diffusion_step are
/// positive; at N = 4, l' >= -1e-14 counts as the boundary case.
Verdict verify_sign_recovery(std::uint64_t states, double k, double l);

/// Property sweep: for `samples` random normalized (k, l), diffusion_step
/// keeps M k^2 + (N - M) l^2 within 1e-12 and applying it twice returns
/// (k, l) within 1e-14.
Verdict verify_conservation(std::uint64_t states, std::uint64_t targets, std::uint64_t samples,
                            std::uint64_t seed);

/// Property sweep for N >= 9: random k < 0 < l with |k/l| < sqrt(N)(1 - 1e-9)
/// must give non-negative outputs, strictly positive when |k/l| < (N - 2)/2.
Verdict verify_sign_recovery_sweep(std::uint64_t states, std::uint64_t samples, std::uint64_t seed);

/// Rounds of grover_iteration_model from the uniform single-target start
/// until k > 1/sqrt(2). Throws TheoremViolation if that takes sqrt(2N) or more.
std::uint64_t find_halfway_iteration(std::uint64_t states);

}  // namespace qsearch
