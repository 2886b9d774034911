// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "qsearch/analysis.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/explicit_matrix.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/state_vector.hpp"
#include "qsearch/transforms.hpp"

#ifndef QSEARCH_CLI_PATH
#error "QSEARCH_CLI_PATH must name the grover-sim executable"
#endif

using namespace qsearch;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(std::string what) {
    if (passed) detail = std::move(what);
    passed = false;
  }
};

std::uint64_t dim_of(unsigned n) { return std::uint64_t{1} << n; }

std::vector<Amplitude> gaussian_vector(std::uint64_t dim, Rng& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Amplitude> v(dim);
  for (auto& a : v) a = {gauss(rng), gauss(rng)};
  return v;
}

double max_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

StateVector as_state(std::vector<Amplitude> v) {
  long double norm = 0.0L;
  for (const auto& a : v) norm += std::norm(a);
  const double scale = 1.0 / std::sqrt(static_cast<double>(norm));
  for (auto& a : v) a *= scale;
  return StateVector::from_amplitudes(std::move(v));
}

// Dense D v with D_ij = 2/N - delta_ij, one row at a time.
std::vector<Amplitude> dense_diffusion(std::span<const Amplitude> v) {
  const std::size_t dim = v.size();
  const double off = 2.0 / static_cast<double>(dim);
  std::vector<Amplitude> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Amplitude acc{0.0, 0.0};
    for (std::size_t j = 0; j < dim; ++j) acc += (i == j ? off - 1.0 : off) * v[j];
    out[i] = acc;
  }
  return out;
}

Outcome success_probability_claim() {
  Outcome out;
  Rng rng(0x5eed0001);
  const auto start = Clock::now();
  double worst = 1.0;
  int runs = 0;
  for (unsigned n = 2; n <= 20; ++n) {
    for (int trial = 0; trial < 16; ++trial) {
      const BasisIndex target = uniform_below(rng, dim_of(n));
      const std::string cmd = fmt::format("\"{}\" run --n {} --target {} --iterations auto --seed {}",
                                          QSEARCH_CLI_PATH, n, target, trial);
      FILE* pipe = popen(cmd.c_str(), "r");
      if (!pipe) {
        out.fail("popen failed");
        return out;
      }
      std::string text;
      char buf[4096];
      while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, got);
      const int status = pclose(pipe);
      if (status != 0) {
        out.fail(fmt::format("n={} target={} exited with status {}", n, target, status));
        continue;
      }
      const auto report = nlohmann::json::parse(text);
      const double p = report.at("success_probability").get<double>();
      worst = std::min(worst, p);
      ++runs;
      if (p < 0.5) out.fail(fmt::format("n={} target={} p={}", n, target, p));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 120.0) out.fail(fmt::format("took {:.1f} s", elapsed));
  if (out.passed) out.detail = fmt::format("{} runs, min p={:.6f}, {:.1f} s", runs, worst, elapsed);
  return out;
}

Outcome diffusion_identity() {
  Outcome out;
  double worst_matrix = 0.0;
  for (unsigned n = 1; n <= 6; ++n) {
    const auto w = explicit_operator(OperatorKind::kWalshHadamard, n);
    const auto r = explicit_operator(OperatorKind::kReflection, n);
    const auto d = explicit_operator(OperatorKind::kDiffusion, n);
    const double err = (w * r * w).max_abs_diff(d);
    // D straight from its entries, independent of explicit_operator
    const std::size_t dim = dim_of(n);
    double entry_err = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const double want = (i == j ? -1.0 : 0.0) + 2.0 / static_cast<double>(dim);
        entry_err = std::max(entry_err, std::abs(d(i, j) - Amplitude{want, 0.0}));
      }
    }
    worst_matrix = std::max({worst_matrix, err, entry_err});
    if (err > 1e-12 || entry_err > 1e-12) {
      out.fail(fmt::format("n={} WRW-D={:.3e} D-entries={:.3e}", n, err, entry_err));
    }
  }

  double worst_vec = 0.0;
  Rng rng(0x5eed0002);
  for (unsigned n = 1; n <= 12; ++n) {
    const auto explicit_d =
        n <= kExplicitMaxQubits ? std::optional(explicit_operator(OperatorKind::kDiffusion, n))
                                : std::nullopt;
    for (int trial = 0; trial < 200; ++trial) {
      auto closed = as_state(gaussian_vector(dim_of(n), rng));
      auto wrw = closed;
      const std::vector<Amplitude> input(closed.amplitudes().begin(), closed.amplitudes().end());
      diffusion(closed);
      diffusion_via_wrw(wrw);
      const auto dense = explicit_d ? explicit_d->apply(input) : dense_diffusion(input);
      const double err = std::max({max_diff(closed.amplitudes(), wrw.amplitudes()),
                                   max_diff(closed.amplitudes(), dense),
                                   max_diff(wrw.amplitudes(), dense)});
      worst_vec = std::max(worst_vec, err);
      if (err > 1e-12) out.fail(fmt::format("n={} vector {} diff={:.3e}", n, trial, err));
    }
  }
  if (out.passed) {
    out.detail = fmt::format("matrices max {:.2e}, 12x200 vectors max {:.2e}", worst_matrix, worst_vec);
  }
  return out;
}

Outcome model_exactness() {
  Outcome out;
  Rng rng(0x5eed0003);
  double worst = 0.0;
  std::size_t records = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    const std::uint64_t dim = dim_of(n);
    const auto max_m = static_cast<std::uint64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(dim))));
    std::vector<std::vector<BasisIndex>> target_sets = {{uniform_below(rng, dim)}};
    if (dim >= 8) target_sets.push_back({0, dim / 2, dim - 1});
    for (const auto& targets : target_sets) {
      const auto oracle = Oracle::from_targets(n, targets);
      const auto recs = compare_trajectory(oracle, max_m);
      records += recs.size();
      for (const auto& r : recs) {
        worst = std::max({worst, std::abs(*r.k_sim - r.k_model), std::abs(*r.l_sim - r.l_model)});
      }
      const Verdict v = verify_model_agreement(recs, 1e-10);
      if (!v.passed) out.fail(fmt::format("n={} M={}: {}", n, targets.size(), v.first_violation->dump()));
    }
  }
  if (out.passed) out.detail = fmt::format("{} records, max diff {:.2e}", records, worst);
  return out;
}

Outcome conservation() {
  Outcome out;
  const std::uint64_t sizes[] = {4, 16, 1024, std::uint64_t{1} << 20};
  for (const auto states : sizes) {
    const Verdict v = verify_conservation(states, 1, 10000, 0x5eed0004 ^ states);
    if (!v.passed) out.fail(fmt::format("N={}: {}", states, v.first_violation->dump()));
  }
  if (out.passed) out.detail = "4 x 10^4 inputs";
  return out;
}

Outcome growth_bound() {
  Outcome out;
  std::uint64_t checked = 0;
  for (unsigned n = 2; n <= 20; ++n) {
    const std::uint64_t dim = dim_of(n);
    const auto horizon = static_cast<std::uint64_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(dim))));
    const Verdict model = verify_growth_bound(model_trajectory(dim, 1, horizon), dim);
    if (!model.passed) out.fail(fmt::format("model n={}: {}", n, model.first_violation->dump()));
    checked += model.params.value("iterations_checked", std::uint64_t{0});

    // same bound on the simulated amplitudes
    const auto recs = compare_trajectory(Oracle::from_targets(n, {dim / 3}), horizon);
    const double bound = 1.0 / (2.0 * std::sqrt(static_cast<double>(dim)));
    const double l_floor = dim == 4 ? -1e-14 : 0.0;
    for (std::size_t i = 1; i < recs.size(); ++i) {
      const double k0 = *recs[i - 1].k_sim, l0 = *recs[i - 1].l_sim;
      if (!(k0 > 0.0 && k0 < 1.0 / std::sqrt(2.0) && l0 > 0.0)) continue;
      const double dk = *recs[i].k_sim - k0;
      const double l1 = *recs[i].l_sim;
      const bool l_ok = dim == 4 ? l1 >= l_floor : l1 > 0.0;
      if (!(dk > bound) || !l_ok) {
        out.fail(fmt::format("simulated n={} m={} dk={} l={}", n, i, dk, l1));
      }
    }
  }
  if (out.passed) out.detail = fmt::format("{} model iterations in range", checked);
  return out;
}

Outcome halfway_bound() {
  Outcome out;
  for (unsigned n = 2; n <= 20; ++n) {
    const std::uint64_t dim = dim_of(n);
    try {
      const auto m = find_halfway_iteration(dim);
      const double limit = std::sqrt(2.0 * static_cast<double>(dim));
      if (!(static_cast<double>(m) < limit)) out.fail(fmt::format("n={} m={} limit={}", n, m, limit));
    } catch (const TheoremViolation& e) {
      out.fail(fmt::format("n={}: {}", n, e.what()));
    }
  }
  if (out.passed) {
    out.detail = fmt::format("n=2..20, m(2^20)={}", find_halfway_iteration(dim_of(20)));
  }
  return out;
}

Outcome norm_drift() {
  Outcome out;
  Rng rng(0x5eed0007);
  double worst = 0.0;
  for (unsigned n = 1; n <= 20; ++n) {
    const auto oracle = Oracle::from_targets(n, {uniform_below(rng, dim_of(n))});
    const auto state = evolve(oracle, optimal_iterations(oracle.state_count(), 1));
    worst = std::max(worst, state.norm_drift());
    if (state.norm_drift() >= 1e-10) out.fail(fmt::format("n={} drift={:.3e}", n, state.norm_drift()));
  }
  if (out.passed) out.detail = fmt::format("n=1..20, max drift {:.2e}", worst);
  return out;
}

Outcome classical_baseline() {
  Outcome out;
  const auto oracle = Oracle::from_targets(10, {777});
  const double mean = mean_classical_probes(oracle, 10000, 0x5eed0008);
  const double expected = (1024.0 + 1.0) / 2.0;
  const double rel = std::abs(mean - expected) / expected;
  out.detail = fmt::format("mean {:.2f} vs {:.1f} ({:.2f}%)", mean, expected, 100.0 * rel);
  if (rel >= 0.02) out.passed = false;
  return out;
}

std::vector<BasisIndex> distinct_targets(unsigned n, std::size_t count, Rng& rng) {
  std::vector<BasisIndex> out;
  while (out.size() < count) {
    const BasisIndex t = uniform_below(rng, dim_of(n));
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

Outcome multi_target() {
  Outcome out;
  Rng rng(0x5eed0009);
  std::string summary;
  for (const std::size_t m : {2u, 4u, 16u}) {
    const auto oracle = Oracle::from_targets(10, distinct_targets(10, m, rng));
    const auto iterations =
        static_cast<std::uint64_t>(std::llround(std::acos(-1.0) / 4.0 * std::sqrt(1024.0 / static_cast<double>(m))));
    const double p = success_probability(evolve(oracle, iterations), oracle);
    summary += fmt::format("M={}:{:.4f} ", m, p);
    if (p < 0.5) out.fail(fmt::format("M={} m={} p={}", m, iterations, p));
  }
  for (const std::size_t m : {1u, 3u, 7u}) {
    const auto oracle = Oracle::from_targets(10, distinct_targets(10, m, rng));
    DegeneracyOptions options;
    options.seed = 0x5eed0009 + m;
    const auto result = degeneracy_search(oracle, options);
    if (!result.found || !oracle.evaluate(*result.found)) {
      out.fail(fmt::format("degeneracy M={} found nothing", m));
    } else {
      summary += fmt::format("hidden M={}:found@{} ", m, *result.range);
    }
  }
  const auto none = degeneracy_search(Oracle::from_targets(10, std::vector<BasisIndex>{}), {});
  if (none.found) out.fail("degeneracy M=0 returned a target");
  if (out.passed) out.detail = summary + "M=0:none";
  return out;
}

Outcome performance() {
  Outcome out;
  double wh = 0.0;
  {
    auto state = StateVector::basis(24, 0, 24);
    const auto start = Clock::now();
    walsh_hadamard(state);
    wh = seconds_since(start);
  }
  if (wh >= 2.0) out.fail(fmt::format("walsh_hadamard n=24 took {:.2f} s", wh));

  GroverConfig config{Oracle::from_targets(24, {0xabcdef}), IterationPolicy::automatic(), 24};
  config.max_qubits = 24;
  const auto start = Clock::now();
  const RunReport report = run(config);
  const double full = seconds_since(start);
  if (full >= 300.0) out.fail(fmt::format("auto run n=24 took {:.1f} s", full));
  if (report.success_probability < 0.5) out.fail(fmt::format("auto run n=24 p={}", report.success_probability));
  if (out.passed) {
    out.detail = fmt::format("WH {:.3f} s, auto run {} iterations {:.1f} s (p={:.9f})", wh,
                             report.iterations, full, report.success_probability);
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "auto runs reach p >= 1/2, n=2..20", success_probability_claim},
      {2, "D = WRW and three diffusion routes agree", diffusion_identity},
      {3, "two-level model matches simulation", model_exactness},
      {4, "k^2 + (N-1) l^2 conserved", conservation},
      {5, "per-iteration growth of k", growth_bound},
      {6, "halfway iteration below sqrt(2N)", halfway_bound},
      {7, "norm drift after auto runs", norm_drift},
      {8, "classical mean probes", classical_baseline},
      {9, "multiple and unknown targets", multi_target},
      {10, "performance at n=24", performance},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome result;
    try {
      result = c.check();
    } catch (const std::exception& e) {
      result.fail(fmt::format("exception: {}", e.what()));
    }
    if (!result.passed) ++failures;
    fmt::print("{} [{:>2}] {} ({:.1f} s): {}\n", result.passed ? "PASS" : "FAIL", c.id, c.name,
               seconds_since(start), result.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
