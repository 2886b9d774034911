#include "qsearch/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsearch/errors.hpp"
#include "qsearch/transforms.hpp"
#include "real_register.hpp"

namespace qsearch {

namespace {

constexpr double kClassTolerance = 1e-12;

struct SmallOptimum {
  std::uint64_t states;
  std::uint64_t targets;
  std::uint64_t iterations;
};

// First peak of the simulated success probability for every N <= 8, M < N/2.
// tests/unit/test_grover.cpp re-derives each entry with trajectory_scan.
constexpr SmallOptimum kSmallOptima[] = {
    {4, 1, 1},
    {8, 1, 2},
    {8, 2, 1},
    {8, 3, 1},
};

void require_targets(const Oracle& oracle) {
  if (oracle.empty()) {
    throw ConfigError("oracle has no targets; nothing satisfies the search condition");
  }
}

}  // namespace

std::uint64_t optimal_iterations(std::uint64_t state_count, std::uint64_t target_count) {
  if (target_count == 0) throw ConfigError("optimal_iterations needs at least one target");
  if (target_count > state_count) {
    throw BoundsError("target count " + std::to_string(target_count) + " exceeds N = " +
                      std::to_string(state_count));
  }
  if (2 * target_count >= state_count) return 0;
  for (const auto& entry : kSmallOptima) {
    if (entry.states == state_count && entry.targets == target_count) return entry.iterations;
  }
  const double ratio = static_cast<double>(state_count) / static_cast<double>(target_count);
  const auto m = static_cast<std::uint64_t>(std::llround(std::numbers::pi / 4.0 * std::sqrt(ratio)));
  return std::max<std::uint64_t>(m, 1);
}

void grover_iteration(StateVector& state, const Oracle& oracle) {
  oracle_flip(state, oracle);
  diffusion(state);
}

StateVector evolve(const Oracle& oracle, std::uint64_t iterations, unsigned cap) {
  detail::RealRegister reg(oracle.qubits(), cap);
  for (std::uint64_t i = 0; i < iterations; ++i) reg.iterate(oracle);
  return reg.to_state();
}

double success_probability(const StateVector& state, const Oracle& oracle) {
  double total = 0.0;
  for (const BasisIndex t : oracle.targets()) total += state.probability_of(t);
  return total;
}

ClassAmplitudes class_amplitudes(const StateVector& state, const Oracle& oracle) {
  const auto amps = state.amplitudes();
  const auto& targets = oracle.targets();
  std::optional<Amplitude> k;
  std::optional<Amplitude> l;
  auto check = [&](std::optional<Amplitude>& ref, const Amplitude& a, BasisIndex i) {
    if (std::abs(a.imag()) > kClassTolerance) {
      throw IntegrityError("amplitude " + std::to_string(i) + " is not real");
    }
    if (!ref) {
      ref = a;
    } else if (std::abs(a - *ref) > kClassTolerance) {
      throw IntegrityError("amplitudes are not uniform within their class at index " +
                           std::to_string(i));
    }
  };
  auto next_target = targets.begin();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if (next_target != targets.end() && *next_target == i) {
      check(k, amps[i], i);
      ++next_target;
    } else {
      check(l, amps[i], i);
    }
  }
  return {k ? k->real() : 0.0, l ? l->real() : 0.0};
}

std::vector<TrajectoryPoint> trajectory_scan(const GroverConfig& config, std::uint64_t max_m) {
  const Oracle& oracle = config.oracle;
  require_targets(oracle);
  if (max_m < 1) throw ConfigError("trajectory scan needs max_m >= 1");
  detail::RealRegister reg(oracle.qubits(), config.max_qubits);
  std::vector<TrajectoryPoint> points;
  points.reserve(max_m + 1);
  for (std::uint64_t m = 0;; ++m) {
    const ClassAmplitudes c = reg.classes(oracle);
    points.push_back({m, c.k, c.l, reg.target_probability(oracle)});
    if (m == max_m) break;
    reg.iterate(oracle);
  }
  reg.to_state().check_integrity();
  return points;
}

std::uint64_t resolve_iterations(const GroverConfig& config) {
  const Oracle& oracle = config.oracle;
  switch (config.policy.kind) {
    case IterationPolicy::Kind::kFixed:
      return config.policy.count;
    case IterationPolicy::Kind::kAuto:
      require_targets(oracle);
      return optimal_iterations(oracle.state_count(), oracle.target_count());
    case IterationPolicy::Kind::kScan: {
      require_targets(oracle);
      const double ratio = static_cast<double>(oracle.state_count()) /
                           static_cast<double>(oracle.target_count());
      const auto horizon = static_cast<std::uint64_t>(std::ceil(std::sqrt(2.0 * ratio)));
      const auto points = trajectory_scan(config, std::max<std::uint64_t>(horizon, 1));
      // first local peak
      for (std::size_t m = 0; m + 1 < points.size(); ++m) {
        if (points[m + 1].prob < points[m].prob) return m;
      }
      const auto best = std::max_element(points.begin(), points.end(),
                                         [](const auto& a, const auto& b) { return a.prob < b.prob; });
      return best->m;
    }
  }
  throw ConfigError("unknown iteration policy");
}

RunReport run(const GroverConfig& config) {
  const Oracle& oracle = config.oracle;
  require_targets(oracle);
  const std::uint64_t iterations = resolve_iterations(config);

  RunReport report;
  detail::RealRegister reg(oracle.qubits(), config.max_qubits);
  std::vector<TrajectoryPoint> trajectory;
  auto capture = [&](std::uint64_t m) {
    const ClassAmplitudes c = reg.classes(oracle);
    trajectory.push_back({m, c.k, c.l, reg.target_probability(oracle)});
  };
  if (config.capture_trajectory) capture(0);
  for (std::uint64_t m = 1; m <= iterations; ++m) {
    reg.iterate(oracle);
    ++report.oracle_calls;
    if (config.capture_trajectory) capture(m);
  }
  const StateVector state = reg.to_state();

  Rng rng(config.seed);
  report.sampled_index = state.sample(rng);
  report.success = oracle.evaluate(report.sampled_index);
  report.iterations = iterations;
  report.success_probability = success_probability(state, oracle);
  if (config.capture_trajectory) report.trajectory = std::move(trajectory);
  return report;
}

DegeneracyResult degeneracy_search(const Oracle& oracle, const DegeneracyOptions& options) {
  DegeneracyResult result;
  const std::uint64_t states = oracle.state_count();
  for (unsigned j = 0; j < oracle.qubits(); ++j) {
    const std::uint64_t guess = std::uint64_t{1} << j;
    const std::uint64_t iterations = optimal_iterations(states, guess);
    // one evolution per range; each sample is billed as a full run
    const StateVector state = evolve(oracle, iterations, options.max_qubits);
    Rng rng(options.seed ^ j);
    for (unsigned attempt = 0; attempt < options.retries; ++attempt) {
      const BasisIndex candidate = state.sample(rng);
      ++result.runs;
      result.oracle_calls += iterations;
      ++result.verifications;
      if (oracle.evaluate(candidate)) {
        result.found = candidate;
        result.range = j;
        return result;
      }
    }
  }
  return result;
}

}  // namespace qsearch
