#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qsearch {

using Amplitude = std::complex<double>;
using BasisIndex = std::uint64_t;

/// Deterministic 64-bit generator used everywhere a seed is accepted.
using Rng = std::mt19937_64;

inline constexpr unsigned kDefaultMaxQubits = 26;

/// Largest qubit count a StateVector may be built with. Honours the
/// GROVER_SIM_NMAX environment variable, otherwise kDefaultMaxQubits.
unsigned max_qubits();

/// Throws ConfigError naming the cap when n is 0 or above `cap`.
void check_qubit_count(unsigned n, unsigned cap = max_qubits());

/// Norm drift beyond this raises IntegrityError; amplitudes are never renormalized.
inline constexpr double kIntegrityTolerance = 1e-6;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Rng& rng);

/// Uniform integer in [0, bound) without modulo bias. bound must be > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Sum of a span using pairwise (tree) reduction with a short linear base case.
Amplitude pairwise_sum(std::span<const Amplitude> values);

/// Complex amplitude register over N = 2^n basis states.
class StateVector {
 public:
  /// Every amplitude 1/sqrt(N). Throws ConfigError when n is 0 or above `cap`.
  static StateVector uniform(unsigned n, unsigned cap = max_qubits());

  /// All mass on `index`.
  static StateVector basis(unsigned n, BasisIndex index, unsigned cap = max_qubits());

  /// Adopts caller-supplied amplitudes. The length must be a power of two
  /// (at least 2), all entries finite, and the norm within kIntegrityTolerance of 1.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  unsigned qubits() const noexcept { return qubits_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

  std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

  const Amplitude& operator[](BasisIndex i) const { return amplitudes_[i]; }

  /// |amplitude[index]|^2. Throws BoundsError for index >= N.
  double probability_of(BasisIndex index) const;

  /// Sum of squared magnitudes, pairwise-accumulated.
  double norm_squared() const;

  /// |norm_squared - 1|.
  double norm_drift() const { return std::abs(norm_squared() - 1.0); }

  /// Throws IntegrityError if any amplitude is non-finite or the drift
  /// exceeds kIntegrityTolerance.
  void check_integrity() const;

  /// Born-rule draw by inverse CDF over the cumulative probabilities.
  /// Runs check_integrity first.
  BasisIndex sample(Rng& rng) const;

 private:
  StateVector(unsigned n, std::vector<Amplitude> amplitudes)
      : qubits_(n), amplitudes_(std::move(amplitudes)) {}

  unsigned qubits_;
  std::vector<Amplitude> amplitudes_;
};

}  // namespace qsearch
