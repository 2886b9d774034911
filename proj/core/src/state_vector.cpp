#include "qsearch/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "pairwise.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

unsigned max_qubits() {
  const char* env = std::getenv("GROVER_SIM_NMAX");
  if (env == nullptr || *env == '\0') return kDefaultMaxQubits;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0 || value > 40) {
    throw ConfigError("GROVER_SIM_NMAX must be an integer in [1, 40], got '" +
                      std::string(env) + "'");
  }
  return static_cast<unsigned>(value);
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Reject the 2^64 mod bound lowest draws so the remainder is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

Amplitude pairwise_sum(std::span<const Amplitude> values) {
  return detail::pairwise_reduce<Amplitude>(
      0, values.size(), [&](std::size_t i) { return values[i]; });
}

void check_qubit_count(unsigned n, unsigned cap) {
  if (n < 1 || n > cap) {
    throw ConfigError("qubit count " + std::to_string(n) + " outside [1, " +
                      std::to_string(cap) + "]; raise the cap with GROVER_SIM_NMAX");
  }
}

StateVector StateVector::uniform(unsigned n, unsigned cap) {
  check_qubit_count(n, cap);
  const std::size_t dim = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector(n, std::vector<Amplitude>(dim, Amplitude{amp, 0.0}));
}

StateVector StateVector::basis(unsigned n, BasisIndex index, unsigned cap) {
  check_qubit_count(n, cap);
  const std::size_t dim = std::size_t{1} << n;
  if (index >= dim) {
    throw BoundsError("basis index " + std::to_string(index) + " >= N = " +
                      std::to_string(dim));
  }
  std::vector<Amplitude> amps(dim);
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw ConfigError("amplitude count " + std::to_string(dim) +
                      " is not a power of two >= 2");
  }
  const auto n = static_cast<unsigned>(std::countr_zero(dim));
  StateVector state(n, std::move(amplitudes));
  state.check_integrity();
  return state;
}

double StateVector::probability_of(BasisIndex index) const {
  if (index >= amplitudes_.size()) {
    throw BoundsError("basis index " + std::to_string(index) + " >= N = " +
                      std::to_string(amplitudes_.size()));
  }
  return std::norm(amplitudes_[index]);
}

double StateVector::norm_squared() const {
  return detail::pairwise_reduce<double>(
      0, amplitudes_.size(), [&](std::size_t i) { return std::norm(amplitudes_[i]); });
}

void StateVector::check_integrity() const {
  const bool finite = std::all_of(amplitudes_.begin(), amplitudes_.end(), [](const Amplitude& a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
  });
  if (!finite) throw IntegrityError("state vector holds a non-finite amplitude");
  const double drift = norm_drift();
  if (!(drift <= kIntegrityTolerance)) {
    throw IntegrityError("state vector norm drifted by " + std::to_string(drift) +
                         " (limit 1e-6)");
  }
}

BasisIndex StateVector::sample(Rng& rng) const {
  check_integrity();
  std::vector<double> cumulative(amplitudes_.size());
  double running = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    running += std::norm(amplitudes_[i]);
    cumulative[i] = running;
  }
  const double u = uniform_unit(rng) * running;
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) {
    // u rounds up to the total only through floating error; take the last
    // index that carries probability.
    const auto last = std::find_if(amplitudes_.rbegin(), amplitudes_.rend(),
                                   [](const Amplitude& a) { return std::norm(a) > 0.0; });
    return static_cast<BasisIndex>(std::distance(last, amplitudes_.rend()) - 1);
  }
  return static_cast<BasisIndex>(std::distance(cumulative.begin(), it));
}

}  // namespace qsearch
