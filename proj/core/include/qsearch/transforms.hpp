#pragma once

#include <map>

#include "qsearch/oracle.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

/// Per-index phase angles in radians; an absent index keeps phase 0.
struct PhaseSpec {
  std::map<BasisIndex, double> angles;
};

/// Walsh-Hadamard transform, in place. Unitary convention: entries
/// 2^{-n/2} (-1)^{popcount(x & y)}. Butterflies run bit 0 to bit n-1, low
/// bits cache-blocked; O(N log N) time and no scratch memory.
void walsh_hadamard(StateVector& state);

/// amplitude[i] *= e^{j phi_i}. Throws BoundsError for an index >= N and
/// ConfigError for a non-finite angle.
void selective_phase(StateVector& state, const PhaseSpec& spec);

/// Negates the amplitude of every oracle target (phase rotation by pi).
void oracle_flip(StateVector& state, const Oracle& oracle);

/// R: keeps amplitude 0, negates every other amplitude.
void reflect_about_zero(StateVector& state);

/// Inversion about average, v_i <- 2A - v_i with A the pairwise-summed mean.
/// O(N); the default diffusion path.
void diffusion(StateVector& state);

/// The same operator computed as W, then R, then W. Kept as an independent
/// route for cross-checking `diffusion`.
void diffusion_via_wrw(StateVector& state);

}  // namespace qsearch
