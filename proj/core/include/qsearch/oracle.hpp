#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsearch/state_vector.hpp"

namespace qsearch {

/// Ordered list of opaque records; index = position in the list.
///
/// On disk: UTF-8, one record per line, index = zero-based line number. A
/// final newline does not start an extra record and a trailing '\r' is
/// stripped so CRLF files read the same as LF files.
class RecordTable {
 public:
  RecordTable() = default;
  explicit RecordTable(std::vector<std::string> records) : records_(std::move(records)) {}

  static RecordTable load(const std::filesystem::path& path);

  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const std::vector<std::string>& records() const noexcept { return records_; }

  /// Smallest n >= 1 with 2^n >= size(). Indices past size() are padding.
  unsigned qubits_needed() const;

 private:
  std::vector<std::string> records_;
};

enum class MatchMode { kExact, kIgnoreAsciiCase };

enum class OracleSource { kExplicitList, kPredicate, kRecordTable };

/// The condition C(S): marks the set of basis indices that satisfy it.
/// Immutable after construction.
class Oracle {
 public:
  /// Deduplicates and sorts. Throws BoundsError for any index >= 2^n and
  /// ConfigError for n outside [1, 63].
  static Oracle from_targets(unsigned n, std::span<const BasisIndex> targets);
  static Oracle from_targets(unsigned n, std::initializer_list<BasisIndex> targets) {
    return from_targets(n, std::span<const BasisIndex>(targets.begin(), targets.size()));
  }

  /// Marks every record equal to `query`. Padding indices never match.
  /// Throws ConfigError on an empty table. No match yields an empty oracle.
  static Oracle from_table(const RecordTable& table, std::string_view query,
                           MatchMode mode = MatchMode::kExact);

  /// Sweeps all 2^n indices through `predicate` once.
  template <typename Predicate>
  static Oracle from_predicate(unsigned n, Predicate&& predicate);

  unsigned qubits() const noexcept { return qubits_; }
  std::uint64_t state_count() const noexcept { return std::uint64_t{1} << qubits_; }
  const std::vector<BasisIndex>& targets() const noexcept { return targets_; }
  std::size_t target_count() const noexcept { return targets_.size(); }
  bool empty() const noexcept { return targets_.empty(); }
  OracleSource source() const noexcept { return source_; }

  /// C(index). Throws BoundsError for index >= 2^n.
  bool evaluate(BasisIndex index) const;

 private:
  Oracle(unsigned n, std::vector<BasisIndex> targets, OracleSource source);

  unsigned qubits_ = 1;
  std::vector<BasisIndex> targets_;
  OracleSource source_ = OracleSource::kExplicitList;
};

template <typename Predicate>
Oracle Oracle::from_predicate(unsigned n, Predicate&& predicate) {
  Oracle probe = from_targets(n, std::span<const BasisIndex>{});
  std::vector<BasisIndex> hits;
  for (BasisIndex i = 0; i < probe.state_count(); ++i) {
    if (predicate(i)) hits.push_back(i);
  }
  return Oracle(n, std::move(hits), OracleSource::kPredicate);
}

/// Classical unstructured search: probes indices in a uniformly random
/// order without repetition until C = 1. Reuses an O(N) scratch
/// permutation across calls.
class ClassicalScanner {
 public:
  explicit ClassicalScanner(const Oracle& oracle);

  /// Number of evaluations until the first hit. Throws ConfigError when the
  /// oracle has no targets.
  std::uint64_t search(Rng& rng);

 private:
  const Oracle* oracle_;
  std::vector<BasisIndex> order_;
};

/// One classical scan with a fresh scratch buffer.
std::uint64_t classical_linear_search(const Oracle& oracle, Rng& rng);

/// Monte Carlo mean probe count over `trials` scans seeded from `seed`.
/// The exact expectation for M targets is (N + 1) / (M + 1).
double mean_classical_probes(const Oracle& oracle, std::uint64_t trials, std::uint64_t seed);

}  // namespace qsearch
