#include "qsearch/analysis.hpp"

#include <cmath>
#include <numbers>

#include "qsearch/errors.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/state_vector.hpp"
#include "real_register.hpp"

namespace qsearch {

TwoLevelState TwoLevelState::uniform(std::uint64_t states, std::uint64_t targets) {
  const double a = 1.0 / std::sqrt(static_cast<double>(states));
  return {states, targets, a, a};
}

TwoLevelState TwoLevelState::normalized(std::uint64_t states, std::uint64_t targets, double k,
                                        double l) {
  if (targets == 0 || states <= targets) {
    throw ConfigError("two-level state needs 0 < M < N");
  }
  TwoLevelState s{states, targets, k, l};
  const double w = s.weight();
  if (!(w > 0.0) || !std::isfinite(w)) throw ConfigError("cannot normalize a zero two-level state");
  const double scale = 1.0 / std::sqrt(w);
  s.k *= scale;
  s.l *= scale;
  return s;
}

double TwoLevelState::weight() const {
  return static_cast<double>(targets) * k * k + static_cast<double>(states - targets) * l * l;
}

TwoLevelState diffusion_step(const TwoLevelState& s) {
  const double n = static_cast<double>(s.states);
  const double mean =
      (static_cast<double>(s.targets) * s.k + static_cast<double>(s.states - s.targets) * s.l) / n;
  return {s.states, s.targets, 2.0 * mean - s.k, 2.0 * mean - s.l};
}

TwoLevelState grover_iteration_model(const TwoLevelState& s) {
  TwoLevelState flipped = s;
  flipped.k = -s.k;
  return diffusion_step(flipped);
}

namespace {

double growth_bound(std::uint64_t states) {
  return 1.0 / (2.0 * std::sqrt(static_cast<double>(states)));
}

}  // namespace

std::vector<TrajectoryRecord> model_trajectory(std::uint64_t states, std::uint64_t targets,
                                               std::uint64_t max_m) {
  std::vector<TrajectoryRecord> records;
  records.reserve(max_m + 1);
  TwoLevelState s = TwoLevelState::uniform(states, targets);
  const double bound = growth_bound(states);
  double previous_k = s.k;
  for (std::uint64_t m = 0;; ++m) {
    records.push_back({m, s.k, s.l, std::nullopt, std::nullopt, m == 0 ? 0.0 : s.k - previous_k,
                       bound});
    if (m == max_m) break;
    previous_k = s.k;
    s = grover_iteration_model(s);
  }
  return records;
}

std::vector<TrajectoryRecord> compare_trajectory(const Oracle& oracle, std::uint64_t max_m) {
  if (oracle.empty()) throw ConfigError("model comparison needs at least one target");
  detail::RealRegister reg(oracle.qubits(), max_qubits());
  TwoLevelState s = TwoLevelState::uniform(oracle.state_count(), oracle.target_count());
  const double bound = growth_bound(oracle.state_count());
  std::vector<TrajectoryRecord> records;
  records.reserve(max_m + 1);
  double previous_k = s.k;
  for (std::uint64_t m = 0;; ++m) {
    const ClassAmplitudes sim = reg.classes(oracle);
    records.push_back({m, s.k, s.l, sim.k, sim.l, m == 0 ? 0.0 : s.k - previous_k, bound});
    if (m == max_m) break;
    previous_k = s.k;
    s = grover_iteration_model(s);
    reg.iterate(oracle);
  }
  reg.to_state().check_integrity();
  return records;
}

void Verdict::fail(nlohmann::json detail) {
  if (passed) first_violation = std::move(detail);
  passed = false;
}

void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"theorem", v.theorem}, {"passed", v.passed}, {"params", v.params}};
  if (v.first_violation) j["first_violation"] = *v.first_violation;
}

Verdict verify_model_agreement(std::span<const TrajectoryRecord> records, double tolerance) {
  Verdict verdict("model-simulation agreement");
  verdict.params = {{"tolerance", tolerance}, {"records", records.size()}};
  double worst = 0.0;
  for (const auto& r : records) {
    if (!r.k_sim || !r.l_sim) {
      verdict.fail({{"m", r.m}, {"reason", "record has no simulation values"}});
      continue;
    }
    const double dk = std::abs(r.k_model - *r.k_sim);
    const double dl = std::abs(r.l_model - *r.l_sim);
    worst = std::max({worst, dk, dl});
    if (!(dk < tolerance && dl < tolerance)) {
      verdict.fail({{"m", r.m}, {"k_model", r.k_model}, {"k_sim", *r.k_sim},
                    {"l_model", r.l_model}, {"l_sim", *r.l_sim}});
    }
  }
  verdict.params["max_error"] = worst;
  return verdict;
}

Verdict verify_growth_bound(std::span<const TrajectoryRecord> records, std::uint64_t states) {
  Verdict verdict("amplitude growth bound");
  const double bound = growth_bound(states);
  const double half_root = 1.0 / std::numbers::sqrt2;
  const double l_floor = states == 4 ? -1e-14 : 0.0;
  std::uint64_t checked = 0;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& before = records[i - 1];
    const auto& after = records[i];
    if (!(before.k_model > 0.0 && before.k_model < half_root && before.l_model > 0.0)) continue;
    ++checked;
    const bool grew = after.delta_k > bound;
    const bool l_ok = states == 4 ? after.l_model >= l_floor : after.l_model > 0.0;
    if (!grew || !l_ok) {
      verdict.fail({{"m", after.m}, {"delta_k", after.delta_k}, {"bound", bound},
                    {"k_before", before.k_model}, {"l_after", after.l_model}});
    }
  }
  verdict.params = {{"N", states}, {"bound", bound}, {"iterations_checked", checked}};
  return verdict;
}

Verdict verify_sign_recovery(std::uint64_t states, double k, double l) {
  const double root = std::sqrt(static_cast<double>(states));
  if (!(k < 0.0 && l > 0.0 && std::abs(k / l) < root)) {
    throw ConfigError("sign recovery requires k < 0 < l and |k/l| < sqrt(N)");
  }
  const TwoLevelState out = diffusion_step(TwoLevelState::normalized(states, 1, k, l));
  Verdict verdict("sign recovery");
  verdict.params = {{"N", states}, {"k", k}, {"l", l}, {"k_out", out.k}, {"l_out", out.l}};
  const bool l_ok = states == 4 ? out.l >= -1e-14 : out.l > 0.0;
  if (!(out.k > 0.0 && l_ok)) {
    verdict.fail({{"k_out", out.k}, {"l_out", out.l}});
  }
  return verdict;
}

Verdict verify_conservation(std::uint64_t states, std::uint64_t targets, std::uint64_t samples,
                            std::uint64_t seed) {
  Verdict verdict("quadratic conservation");
  Rng rng(seed);
  double worst_weight = 0.0;
  double worst_return = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double k = 2.0 * uniform_unit(rng) - 1.0;
    const double l = 2.0 * uniform_unit(rng) - 1.0;
    if (k == 0.0 && l == 0.0) continue;
    const TwoLevelState in = TwoLevelState::normalized(states, targets, k, l);
    const TwoLevelState out = diffusion_step(in);
    const TwoLevelState back = diffusion_step(out);
    const double weight_error = std::abs(out.weight() - in.weight());
    const double return_error = std::max(std::abs(back.k - in.k), std::abs(back.l - in.l));
    worst_weight = std::max(worst_weight, weight_error);
    worst_return = std::max(worst_return, return_error);
    if (!(weight_error < 1e-12 && return_error < 1e-14)) {
      verdict.fail({{"k", in.k}, {"l", in.l}, {"weight_error", weight_error},
                    {"involution_error", return_error}});
    }
  }
  verdict.params = {{"N", states}, {"M", targets}, {"samples", samples},
                    {"max_weight_error", worst_weight}, {"max_involution_error", worst_return}};
  return verdict;
}

Verdict verify_sign_recovery_sweep(std::uint64_t states, std::uint64_t samples, std::uint64_t seed) {
  if (states < 9) throw ConfigError("sign recovery sweep needs N >= 9");
  Verdict verdict("sign recovery");
  const double n = static_cast<double>(states);
  const double ratio_limit = std::sqrt(n) * (1.0 - 1e-9);
  const double interior = (n - 2.0) / 2.0;
  Rng rng(seed);
  std::uint64_t strict = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double l = 1.0 - uniform_unit(rng);  // (0, 1]
    const double ratio = uniform_unit(rng) * ratio_limit;
    if (ratio == 0.0) continue;
    const double k = -ratio * l;
    const TwoLevelState out = diffusion_step(TwoLevelState::normalized(states, 1, k, l));
    const bool needs_strict = ratio < interior;
    strict += needs_strict ? 1 : 0;
    const bool ok = needs_strict ? (out.k > 0.0 && out.l > 0.0) : (out.k >= 0.0 && out.l >= 0.0);
    if (!ok) verdict.fail({{"k", k}, {"l", l}, {"k_out", out.k}, {"l_out", out.l}});
  }
  verdict.params = {{"N", states}, {"samples", samples}, {"strict_samples", strict}};
  return verdict;
}

std::uint64_t find_halfway_iteration(std::uint64_t states) {
  const double limit = std::sqrt(2.0 * static_cast<double>(states));
  const double half_root = 1.0 / std::numbers::sqrt2;
  TwoLevelState s = TwoLevelState::uniform(states, 1);
  std::uint64_t m = 0;
  while (!(s.k > half_root)) {
    s = grover_iteration_model(s);
    ++m;
    if (static_cast<double>(m) >= limit) {
      throw TheoremViolation("k did not exceed 1/sqrt(2) within sqrt(2N) = " +
                             std::to_string(limit) + " iterations for N = " +
                             std::to_string(states));
    }
  }
  return m;
}

}  // namespace qsearch
