#include <benchmark/benchmark.h>

#include "qsearch/grover.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/state_vector.hpp"
#include "qsearch/transforms.hpp"

using namespace qsearch;

namespace {

void set_amplitude_counters(benchmark::State& st, std::uint64_t dim, std::uint64_t per_iter) {
  st.counters["N"] = static_cast<double>(dim);
  st.counters["amp_ops"] = benchmark::Counter(static_cast<double>(dim * per_iter),
                                              benchmark::Counter::kIsIterationInvariantRate);
}

void BM_WalshHadamard(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  auto state = StateVector::basis(n, 0, n);
  for (auto _ : st) {
    walsh_hadamard(state);
    benchmark::DoNotOptimize(state.amplitudes().data());
  }
  set_amplitude_counters(st, state.size(), n);
}
BENCHMARK(BM_WalshHadamard)->DenseRange(10, 22, 4)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Diffusion(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  auto state = StateVector::uniform(n, n);
  for (auto _ : st) {
    diffusion(state);
    benchmark::DoNotOptimize(state.amplitudes().data());
  }
  set_amplitude_counters(st, state.size(), 1);
}
BENCHMARK(BM_Diffusion)->DenseRange(10, 22, 4)->Unit(benchmark::kMicrosecond);

void BM_DiffusionWRW(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  auto state = StateVector::uniform(n, n);
  for (auto _ : st) {
    diffusion_via_wrw(state);
    benchmark::DoNotOptimize(state.amplitudes().data());
  }
  set_amplitude_counters(st, state.size(), 2 * n + 1);
}
BENCHMARK(BM_DiffusionWRW)->DenseRange(10, 22, 4)->Unit(benchmark::kMicrosecond);

void BM_GroverIteration(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  const auto oracle = Oracle::from_targets(n, {(std::uint64_t{1} << n) / 3});
  auto state = StateVector::uniform(n, n);
  for (auto _ : st) {
    grover_iteration(state, oracle);
    benchmark::DoNotOptimize(state.amplitudes().data());
  }
  st.counters["oracle_calls"] = benchmark::Counter(1.0, benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_GroverIteration)->DenseRange(10, 22, 4)->Unit(benchmark::kMicrosecond);

// Full auto-length search on the fused real path.
void BM_Evolve(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  const auto oracle = Oracle::from_targets(n, {(std::uint64_t{1} << n) / 3});
  const auto iterations = optimal_iterations(oracle.state_count(), 1);
  for (auto _ : st) {
    auto state = evolve(oracle, iterations, n);
    benchmark::DoNotOptimize(state.amplitudes().data());
  }
  st.counters["oracle_calls"] =
      benchmark::Counter(static_cast<double>(iterations), benchmark::Counter::kIsIterationInvariantRate);
  set_amplitude_counters(st, oracle.state_count(), iterations);
}
BENCHMARK(BM_Evolve)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ClassicalScan(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  const auto oracle = Oracle::from_targets(n, {(std::uint64_t{1} << n) / 3});
  Rng rng(1);
  ClassicalScanner scanner(oracle);
  for (auto _ : st) benchmark::DoNotOptimize(scanner.search(rng));
}
BENCHMARK(BM_ClassicalScan)->DenseRange(8, 20, 4);

}  // namespace

BENCHMARK_MAIN();
