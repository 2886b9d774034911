#include "qsearch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>

#include "qsearch/errors.hpp"

namespace qsearch {

RecordTable RecordTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open record table '" + path.string() + "'");
  std::vector<std::string> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    records.push_back(std::move(line));
  }
  return RecordTable(std::move(records));
}

unsigned RecordTable::qubits_needed() const {
  if (records_.size() <= 2) return 1;
  return static_cast<unsigned>(std::bit_width(records_.size() - 1));
}

Oracle::Oracle(unsigned n, std::vector<BasisIndex> targets, OracleSource source)
    : qubits_(n), targets_(std::move(targets)), source_(source) {}

Oracle Oracle::from_targets(unsigned n, std::span<const BasisIndex> targets) {
  if (n < 1 || n > 63) {
    throw ConfigError("oracle qubit count " + std::to_string(n) + " outside [1, 63]");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<BasisIndex> sorted(targets.begin(), targets.end());
  for (const BasisIndex t : sorted) {
    if (t >= dim) {
      throw BoundsError("target index " + std::to_string(t) + " >= N = " +
                        std::to_string(dim) + " (n = " + std::to_string(n) + ")");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return Oracle(n, std::move(sorted), OracleSource::kExplicitList);
}

namespace {

bool equal_ignore_ascii_case(std::string_view a, std::string_view b) {
  const auto lower = [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<unsigned char>(c - 'A' + 'a') : c;
  };
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [&](char x, char y) {
           return lower(static_cast<unsigned char>(x)) == lower(static_cast<unsigned char>(y));
         });
}

}  // namespace

Oracle Oracle::from_table(const RecordTable& table, std::string_view query, MatchMode mode) {
  if (table.empty()) throw ConfigError("record table is empty");
  std::vector<BasisIndex> hits;
  const auto& records = table.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const bool match = mode == MatchMode::kExact ? records[i] == query
                                                 : equal_ignore_ascii_case(records[i], query);
    if (match) hits.push_back(i);
  }
  return Oracle(table.qubits_needed(), std::move(hits), OracleSource::kRecordTable);
}

bool Oracle::evaluate(BasisIndex index) const {
  if (index >= state_count()) {
    throw BoundsError("oracle query index " + std::to_string(index) + " >= N = " +
                      std::to_string(state_count()));
  }
  return std::binary_search(targets_.begin(), targets_.end(), index);
}

ClassicalScanner::ClassicalScanner(const Oracle& oracle) : oracle_(&oracle) {
  if (oracle.empty()) throw ConfigError("classical search needs at least one target");
  order_.resize(oracle.state_count());
  std::iota(order_.begin(), order_.end(), BasisIndex{0});
}

std::uint64_t ClassicalScanner::search(Rng& rng) {
  // Partial Fisher-Yates: each step draws a not-yet-probed index uniformly.
  // order_ stays a permutation between calls, which keeps every prefix uniform.
  const std::uint64_t dim = order_.size();
  for (std::uint64_t probes = 0; probes < dim; ++probes) {
    const std::uint64_t pick = probes + uniform_below(rng, dim - probes);
    std::swap(order_[probes], order_[pick]);
    if (oracle_->evaluate(order_[probes])) return probes + 1;
  }
  throw TheoremViolation("classical scan exhausted all indices without a hit");
}

std::uint64_t classical_linear_search(const Oracle& oracle, Rng& rng) {
  ClassicalScanner scanner(oracle);
  return scanner.search(rng);
}

double mean_classical_probes(const Oracle& oracle, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw ConfigError("trial count must be positive");
  ClassicalScanner scanner(oracle);
  Rng rng(seed);
  double total = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) total += static_cast<double>(scanner.search(rng));
  return total / static_cast<double>(trials);
}

}  // namespace qsearch
