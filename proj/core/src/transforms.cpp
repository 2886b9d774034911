#include "qsearch/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

namespace {

// 2^12 complex doubles = 64 KiB, comfortably inside L2.
constexpr unsigned kBlockBits = 12;

// Butterfly on `bit` over [begin, end); `scale` multiplies both outputs.
void butterfly(Amplitude* a, std::size_t begin, std::size_t end, unsigned bit, double scale) {
  const std::size_t half = std::size_t{1} << bit;
  for (std::size_t base = begin; base < end; base += 2 * half) {
    Amplitude* lo = a + base;
    Amplitude* hi = lo + half;
    if (scale == 1.0) {
      for (std::size_t j = 0; j < half; ++j) {
        const Amplitude x = lo[j];
        const Amplitude y = hi[j];
        lo[j] = x + y;
        hi[j] = x - y;
      }
    } else {
      for (std::size_t j = 0; j < half; ++j) {
        const Amplitude x = lo[j];
        const Amplitude y = hi[j];
        lo[j] = (x + y) * scale;
        hi[j] = (x - y) * scale;
      }
    }
  }
}

double hadamard_scale(unsigned n) {
  // 2^{-n/2}; exact for even n.
  const double half_power = std::ldexp(1.0, -static_cast<int>(n / 2));
  return n % 2 == 0 ? half_power : half_power / std::sqrt(2.0);
}

}  // namespace

void walsh_hadamard(StateVector& state) {
  Amplitude* a = state.amplitudes().data();
  const std::size_t dim = state.size();
  const unsigned n = state.qubits();
  const double scale = hadamard_scale(n);
  const unsigned local_bits = std::min(n, kBlockBits);
  const std::size_t block = std::size_t{1} << local_bits;

  for (std::size_t base = 0; base < dim; base += block) {
    for (unsigned bit = 0; bit < local_bits; ++bit) {
      const bool last = bit + 1 == n;
      butterfly(a, base, base + block, bit, last ? scale : 1.0);
    }
  }
  for (unsigned bit = local_bits; bit < n; ++bit) {
    const bool last = bit + 1 == n;
    butterfly(a, 0, dim, bit, last ? scale : 1.0);
  }
}

void selective_phase(StateVector& state, const PhaseSpec& spec) {
  for (const auto& [index, phi] : spec.angles) {
    if (index >= state.size()) {
      throw BoundsError("phase index " + std::to_string(index) + " >= N = " +
                        std::to_string(state.size()));
    }
    if (!std::isfinite(phi)) {
      throw ConfigError("phase angle for index " + std::to_string(index) + " is not finite");
    }
  }
  auto amps = state.amplitudes();
  for (const auto& [index, phi] : spec.angles) amps[index] *= std::polar(1.0, phi);
}

void oracle_flip(StateVector& state, const Oracle& oracle) {
  const auto& targets = oracle.targets();
  if (!targets.empty() && targets.back() >= state.size()) {
    throw BoundsError("oracle target " + std::to_string(targets.back()) + " >= N = " +
                      std::to_string(state.size()));
  }
  auto amps = state.amplitudes();
  for (const BasisIndex t : targets) amps[t] = -amps[t];
}

void reflect_about_zero(StateVector& state) {
  auto amps = state.amplitudes();
  for (std::size_t i = 1; i < amps.size(); ++i) amps[i] = -amps[i];
}

void diffusion(StateVector& state) {
  auto amps = state.amplitudes();
  const Amplitude twice_mean = 2.0 * pairwise_sum(amps) / static_cast<double>(amps.size());
  for (Amplitude& v : amps) v = twice_mean - v;
}

void diffusion_via_wrw(StateVector& state) {
  walsh_hadamard(state);
  reflect_about_zero(state);
  walsh_hadamard(state);
}

}  // namespace qsearch
