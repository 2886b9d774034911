#include "qsearch/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsearch/errors.hpp"
#include "qsearch/explicit_matrix.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/transforms.hpp"

namespace qsearch {

namespace {

constexpr unsigned kDenseMaxQubits = 6;
constexpr double kRouteTolerance = 1e-12;

struct CheckName {
  Check check;
  std::string_view key;
};

constexpr CheckName kCheckNames[] = {
    {Check::kDiffusionRoutes, "1"}, {Check::kUnitarity, "unitarity"},
    {Check::kModelExactness, "2"},  {Check::kSignRecovery, "2.1"},
    {Check::kConservation, "2.2"},  {Check::kGrowthBound, "3"},
    {Check::kHalfway, "halfway"},
};

std::vector<Amplitude> random_amplitudes(std::size_t dim, Rng& rng) {
  std::vector<Amplitude> v(dim);
  for (auto& a : v) a = {2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0};
  double norm = 0.0;
  for (const auto& a : v) norm += std::norm(a);
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : v) a *= scale;
  return v;
}

double max_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

Verdict check_diffusion_routes(const VerifyOptions& o, unsigned n, Rng& rng) {
  Verdict v("D = WRW");
  const auto& reflect = o.reflection ? o.reflection : reflect_about_zero;
  double worst_matrix = 0.0;
  if (n <= kDenseMaxQubits) {
    const auto w = explicit_operator(OperatorKind::kWalshHadamard, n);
    const auto r = explicit_operator(OperatorKind::kReflection, n);
    const auto d = explicit_operator(OperatorKind::kDiffusion, n);
    worst_matrix = (w * r * w).max_abs_diff(d);
    if (!(worst_matrix < kRouteTolerance)) {
      v.fail({{"n", n}, {"route", "explicit WRW vs explicit D"}, {"error", worst_matrix}});
    }
  }
  const std::optional<ExplicitMatrix> dense =
      n <= kDenseMaxQubits ? std::optional(explicit_operator(OperatorKind::kDiffusion, n))
                           : std::nullopt;
  double worst_vector = 0.0;
  for (unsigned trial = 0; trial < o.random_vectors; ++trial) {
    const auto input = random_amplitudes(std::size_t{1} << n, rng);
    StateVector closed = StateVector::from_amplitudes(input);
    StateVector wrw = closed;
    diffusion(closed);
    walsh_hadamard(wrw);
    reflect(wrw);
    walsh_hadamard(wrw);
    double err = max_diff(closed.amplitudes(), wrw.amplitudes());
    if (dense) {
      const auto product = dense->apply(input);
      err = std::max({err, max_diff(product, closed.amplitudes()), max_diff(product, wrw.amplitudes())});
    }
    worst_vector = std::max(worst_vector, err);
    if (!(err < kRouteTolerance)) {
      v.fail({{"n", n}, {"route", "diffusion kernels on a random vector"}, {"trial", trial},
              {"error", err}});
    }
  }
  v.params = {{"n", n}, {"vectors", o.random_vectors}, {"max_matrix_error", worst_matrix},
              {"max_vector_error", worst_vector}};
  return v;
}

Verdict check_unitarity(unsigned n) {
  Verdict v("unitarity");
  const double w_err = explicit_operator(OperatorKind::kWalshHadamard, n).unitarity_error();
  const double d_err = explicit_operator(OperatorKind::kDiffusion, n).unitarity_error();
  const auto p = explicit_operator(OperatorKind::kProjection, n);
  const double p_err = (p * p).max_abs_diff(p);
  v.params = {{"n", n}, {"W", w_err}, {"D", d_err}, {"P_idempotence", p_err}};
  if (!(w_err < 1e-10)) v.fail({{"n", n}, {"operator", "W"}, {"error", w_err}});
  if (!(d_err < 1e-10)) v.fail({{"n", n}, {"operator", "D"}, {"error", d_err}});
  if (!(p_err < 1e-14)) v.fail({{"n", n}, {"operator", "P"}, {"error", p_err}});
  return v;
}

Verdict check_model_exactness(unsigned n, Rng& rng) {
  const std::uint64_t states = std::uint64_t{1} << n;
  const BasisIndex target = uniform_below(rng, states);
  const auto max_m = static_cast<std::uint64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(states))));
  const BasisIndex targets[] = {target};
  const auto records = compare_trajectory(Oracle::from_targets(n, targets), max_m);
  Verdict v = verify_model_agreement(records, 1e-10);
  v.theorem = "two-level exactness";
  v.params["n"] = n;
  v.params["target"] = target;
  return v;
}

Verdict check_growth(unsigned n) {
  const std::uint64_t states = std::uint64_t{1} << n;
  // Run one step past the halfway point so the last precondition-region
  // iteration is covered; fall back to 2 sqrt(N) if the halfway bound fails.
  std::uint64_t horizon = 0;
  try {
    horizon = find_halfway_iteration(states);
  } catch (const TheoremViolation&) {
    horizon = static_cast<std::uint64_t>(2.0 * std::sqrt(static_cast<double>(states)));
  }
  const auto records = model_trajectory(states, 1, horizon + 1);
  Verdict v = verify_growth_bound(records, states);
  v.params["n"] = n;
  return v;
}

Verdict check_halfway(unsigned n) {
  const std::uint64_t states = std::uint64_t{1} << n;
  Verdict v("halfway bound");
  const double limit = std::sqrt(2.0 * static_cast<double>(states));
  try {
    const auto m = find_halfway_iteration(states);
    v.params = {{"n", n}, {"iterations", m}, {"limit", limit}};
  } catch (const TheoremViolation& e) {
    v.params = {{"n", n}, {"limit", limit}};
    v.fail({{"n", n}, {"reason", e.what()}});
  }
  return v;
}

Verdict check_sign_recovery(unsigned n, std::uint64_t samples, std::uint64_t seed) {
  const std::uint64_t states = std::uint64_t{1} << n;
  if (states < 9) {
    // N = 4 boundary point: l lands on exactly 0.
    Verdict v = verify_sign_recovery(states, -0.5, 0.5);
    v.params["n"] = n;
    return v;
  }
  Verdict v = verify_sign_recovery_sweep(states, samples, seed);
  v.params["n"] = n;
  return v;
}

}  // namespace

std::string_view check_key(Check check) {
  for (const auto& entry : kCheckNames) {
    if (entry.check == check) return entry.key;
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view key) {
  for (const auto& entry : kCheckNames) {
    if (entry.key == key) return entry.check;
  }
  return std::nullopt;
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& entry : kCheckNames) out.push_back(entry.check);
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

void to_json(nlohmann::json& j, const SuiteReport& report) {
  j = nlohmann::json{{"passed", report.passed()}, {"verdicts", report.verdicts}};
  const auto failed = std::find_if(report.verdicts.begin(), report.verdicts.end(),
                                   [](const Verdict& v) { return !v.passed; });
  if (failed != report.verdicts.end()) j["first_failure"] = *failed;
}

SuiteReport run_verification(const VerifyOptions& options) {
  if (options.n_min < 1 || options.n_min > options.n_max) {
    throw ConfigError("verification range needs 1 <= n_min <= n_max");
  }
  const unsigned sim_cap = max_qubits();
  const auto checks = options.checks.empty() ? all_checks() : options.checks;
  SuiteReport report;
  Rng rng(options.seed);
  for (const Check check : checks) {
    for (unsigned n = std::max(options.n_min, 2u); n <= options.n_max; ++n) {
      const std::uint64_t seed = options.seed ^ (std::uint64_t{n} << 32);
      Verdict v;
      switch (check) {
        case Check::kDiffusionRoutes:
          if (n > sim_cap) continue;
          v = check_diffusion_routes(options, n, rng);
          break;
        case Check::kUnitarity:
          if (n > kDenseMaxQubits) continue;
          v = check_unitarity(n);
          break;
        case Check::kModelExactness:
          if (n > sim_cap) continue;
          v = check_model_exactness(n, rng);
          break;
        case Check::kSignRecovery:
          v = check_sign_recovery(n, options.random_pairs, seed);
          break;
        case Check::kConservation:
          v = verify_conservation(std::uint64_t{1} << n, 1, options.random_pairs, seed);
          v.params["n"] = n;
          break;
        case Check::kGrowthBound:
          v = check_growth(n);
          break;
        case Check::kHalfway:
          v = check_halfway(n);
          break;
      }
      v.params["check"] = std::string(check_key(check));
      report.verdicts.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace qsearch
