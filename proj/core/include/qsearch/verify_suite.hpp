#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qsearch/analysis.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

enum class Check {
  kDiffusionRoutes,   ///< "1": D = WRW, three diffusion routes agree
  kUnitarity,         ///< "unitarity": W, D unitary; P^2 = P
  kModelExactness,    ///< "2": two-level model tracks the simulation
  kSignRecovery,      ///< "2.1"
  kConservation,      ///< "2.2"
  kGrowthBound,       ///< "3"
  kHalfway,           ///< "halfway": k > 1/sqrt(2) within sqrt(2N) rounds
};

/// Selector string accepted by `grover-sim verify --theorem`.
std::string_view check_key(Check check);
std::optional<Check> parse_check(std::string_view key);
std::vector<Check> all_checks();

struct VerifyOptions {
  unsigned n_min = 2;
  unsigned n_max = 12;
  std::vector<Check> checks;  ///< empty runs everything
  std::uint64_t seed = 1;
  unsigned random_vectors = 200;
  std::uint64_t random_pairs = 10000;
  /// The R step inside the WRW route. Swapping in a faulty kernel is how the
  /// suite's own negative control is exercised.
  std::function<void(StateVector&)> reflection;
};

struct SuiteReport {
  std::vector<Verdict> verdicts;
  bool passed() const;
};

void to_json(nlohmann::json& j, const SuiteReport& report);

/// Runs the selected checks for every n in [n_min, n_max]. Dense-matrix
/// checks are limited to n <= 6 and full simulation checks to
/// n <= max_qubits(). Throws ConfigError on an empty or inverted range.
SuiteReport run_verification(const VerifyOptions& options);

}  // namespace qsearch
