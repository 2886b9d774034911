#include "real_register.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pairwise.hpp"
#include "qsearch/errors.hpp"

namespace qsearch::detail {

namespace {

constexpr std::size_t kBlock = 4096;
constexpr double kClassTolerance = 1e-12;

double block_sum(const double* v, std::size_t count) {
  return pairwise_reduce<double>(0, count, [v](std::size_t i) { return v[i]; });
}

}  // namespace

RealRegister::RealRegister(unsigned n, unsigned cap) : qubits_(n) {
  check_qubit_count(n, cap);
  const std::size_t dim = std::size_t{1} << n;
  amps_.assign(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  block_sums_.resize((dim + kBlock - 1) / kBlock);
  for (std::size_t b = 0; b < block_sums_.size(); ++b) {
    const std::size_t begin = b * kBlock;
    block_sums_[b] = block_sum(amps_.data() + begin, std::min(kBlock, dim - begin));
  }
  sum_ = pairwise_reduce<double>(0, block_sums_.size(), [this](std::size_t b) { return block_sums_[b]; });
}

void RealRegister::iterate(const Oracle& oracle) {
  const auto& targets = oracle.targets();
  const std::size_t dim = amps_.size();
  if (!targets.empty() && targets.back() >= dim) {
    throw BoundsError("oracle target " + std::to_string(targets.back()) + " >= N = " +
                      std::to_string(dim));
  }
  double flipped_sum = sum_;
  for (const BasisIndex t : targets) {
    flipped_sum -= 2.0 * amps_[t];
    amps_[t] = -amps_[t];
  }
  const double twice_mean = 2.0 * flipped_sum / static_cast<double>(dim);
  double* a = amps_.data();
  for (std::size_t b = 0; b < block_sums_.size(); ++b) {
    const std::size_t begin = b * kBlock;
    const std::size_t count = std::min(kBlock, dim - begin);
    double* block = a + begin;
    for (std::size_t i = 0; i < count; ++i) block[i] = twice_mean - block[i];
    block_sums_[b] = block_sum(block, count);
  }
  sum_ = pairwise_reduce<double>(0, block_sums_.size(), [this](std::size_t b) { return block_sums_[b]; });
}

StateVector RealRegister::to_state() const {
  std::vector<Amplitude> complex(amps_.size());
  std::transform(amps_.begin(), amps_.end(), complex.begin(), [](double v) { return Amplitude{v, 0.0}; });
  return StateVector::from_amplitudes(std::move(complex));
}

ClassAmplitudes RealRegister::classes(const Oracle& oracle) const {
  const auto& targets = oracle.targets();
  std::optional<double> k;
  std::optional<double> l;
  auto check = [](std::optional<double>& ref, double v, BasisIndex i) {
    if (!ref) {
      ref = v;
    } else if (std::abs(v - *ref) > kClassTolerance) {
      throw IntegrityError("amplitudes are not uniform within their class at index " +
                           std::to_string(i));
    }
  };
  auto next_target = targets.begin();
  for (BasisIndex i = 0; i < amps_.size(); ++i) {
    if (next_target != targets.end() && *next_target == i) {
      check(k, amps_[i], i);
      ++next_target;
    } else {
      check(l, amps_[i], i);
    }
  }
  return {k.value_or(0.0), l.value_or(0.0)};
}

double RealRegister::target_probability(const Oracle& oracle) const {
  double total = 0.0;
  for (const BasisIndex t : oracle.targets()) {
    if (t >= amps_.size()) throw BoundsError("oracle target outside the register");
    total += amps_[t] * amps_[t];
  }
  return total;
}

}  // namespace qsearch::detail
