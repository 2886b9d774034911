#pragma once

#include <vector>

#include "qsearch/grover.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch::detail {

// Real-valued register for the oracle/diffusion loop. Starting from the
// uniform state every amplitude stays real, so this produces the same real
// parts as the complex kernels with half the memory traffic. Each iteration
// is one pass: targets are negated, v <- 2A - v is applied block by block,
// and the block is summed while still in cache for the next mean.
class RealRegister {
 public:
  RealRegister(unsigned n, unsigned cap);

  void iterate(const Oracle& oracle);

  StateVector to_state() const;
  ClassAmplitudes classes(const Oracle& oracle) const;
  double target_probability(const Oracle& oracle) const;

 private:
  unsigned qubits_;
  std::vector<double> amps_;
  std::vector<double> block_sums_;
  double sum_;
};

}  // namespace qsearch::detail
