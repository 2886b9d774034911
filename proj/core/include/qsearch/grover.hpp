#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsearch/oracle.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

/// How many oracle + diffusion rounds a run performs.
struct IterationPolicy {
  enum class Kind {
    kFixed,  ///< exactly `count` rounds
    kAuto,   ///< optimal_iterations(N, M)
    kScan,   ///< first peak of a simulated trajectory over [0, ceil(sqrt(2N/M))]
  };
  Kind kind = Kind::kAuto;
  std::uint64_t count = 0;

  static IterationPolicy fixed(std::uint64_t m) { return {Kind::kFixed, m}; }
  static IterationPolicy automatic() { return {Kind::kAuto, 0}; }
  static IterationPolicy scan() { return {Kind::kScan, 0}; }
};

struct GroverConfig {
  Oracle oracle;
  IterationPolicy policy = IterationPolicy::automatic();
  std::uint64_t seed = 0;
  bool capture_trajectory = false;
  unsigned max_qubits = qsearch::max_qubits();
};

/// Common target amplitude k and common non-target amplitude l.
struct ClassAmplitudes {
  double k = 0.0;
  double l = 0.0;
};

struct TrajectoryPoint {
  std::uint64_t m = 0;
  double k = 0.0;
  double l = 0.0;
  double prob = 0.0;  ///< total probability on the targets
};

struct RunReport {
  BasisIndex sampled_index = 0;
  bool success = false;
  std::uint64_t iterations = 0;
  std::uint64_t oracle_calls = 0;
  double success_probability = 0.0;  ///< before measurement
  std::optional<std::vector<TrajectoryPoint>> trajectory;
};

/// Iteration count for N states with M marked ones: round(pi/4 sqrt(N/M)),
/// 0 when M >= N/2, at least 1 otherwise. For N <= 8 a table of the
/// simulated optimum is used instead, since the formula overshoots at N = 4.
/// Throws ConfigError for M = 0 and BoundsError for M > N.
std::uint64_t optimal_iterations(std::uint64_t state_count, std::uint64_t target_count);

/// Oracle phase flip followed by diffusion.
void grover_iteration(StateVector& state, const Oracle& oracle);

/// Uniform start followed by `iterations` Grover iterations.
StateVector evolve(const Oracle& oracle, std::uint64_t iterations,
                   unsigned cap = max_qubits());

/// Sum of probability over the oracle's targets.
double success_probability(const StateVector& state, const Oracle& oracle);

/// Reads (k, l) off a state whose amplitudes are uniform within the target
/// and non-target classes. Throws IntegrityError when either class deviates
/// by more than 1e-12 or an amplitude has an imaginary part beyond 1e-12.
/// l is 0 when every index is a target; k is 0 when none is.
ClassAmplitudes class_amplitudes(const StateVector& state, const Oracle& oracle);

/// Resolves the policy to a concrete count. Throws ConfigError on an
/// empty oracle for kAuto and kScan.
std::uint64_t resolve_iterations(const GroverConfig& config);

/// uniform -> [flip -> diffusion]^m -> sample. Throws ConfigError when the
/// oracle has no targets; IntegrityError propagates from the state vector.
RunReport run(const GroverConfig& config);

/// Target probability (with k and l) after every iteration 0..max_m of a
/// single simulation.
std::vector<TrajectoryPoint> trajectory_scan(const GroverConfig& config, std::uint64_t max_m);

struct DegeneracyOptions {
  unsigned retries = 3;
  std::uint64_t seed = 0;
  unsigned max_qubits = qsearch::max_qubits();
};

struct DegeneracyResult {
  std::optional<BasisIndex> found;
  std::optional<unsigned> range;  ///< j of the successful 2^j guess
  std::uint64_t runs = 0;
  std::uint64_t oracle_calls = 0;      ///< quantum oracle applications
  std::uint64_t verifications = 0;     ///< classical evaluations of a sample
};

/// Search with an unknown number of targets: guesses M = 2^j for
/// j = 0..n-1, runs `retries` times per guess and classically checks each
/// sample. Range j draws from an RNG seeded with seed XOR j. An empty
/// oracle is allowed and yields no result.
DegeneracyResult degeneracy_search(const Oracle& oracle, const DegeneracyOptions& options = {});

}  // namespace qsearch
