#pragma once

#include <cstddef>

namespace qsearch::detail {

inline constexpr std::size_t kPairwiseBlock = 128;

// Pairwise reduction of term(i) over [begin, end). Error grows as O(log n)
// instead of O(n) for a running sum. The base case keeps eight partial sums
// so the adds pipeline.
template <typename T, typename Term>
T pairwise_reduce(std::size_t begin, std::size_t end, const Term& term) {
  const std::size_t count = end - begin;
  if (count <= kPairwiseBlock) {
    T lanes[8]{};
    std::size_t i = begin;
    for (; i + 8 <= end; i += 8) {
      for (std::size_t j = 0; j < 8; ++j) lanes[j] += term(i + j);
    }
    T tail{};
    for (; i < end; ++i) tail += term(i);
    return ((lanes[0] + lanes[1]) + (lanes[2] + lanes[3])) +
           ((lanes[4] + lanes[5]) + (lanes[6] + lanes[7])) + tail;
  }
  const std::size_t mid = begin + count / 2;
  return pairwise_reduce<T>(begin, mid, term) + pairwise_reduce<T>(mid, end, term);
}

}  // namespace qsearch::detail
