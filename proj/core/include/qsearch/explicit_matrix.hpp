#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsearch/oracle.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

/// Dense N x N complex matrix, row-major. Only meant for small N
/// cross-validation of the fast kernels.
class ExplicitMatrix {
 public:
  explicit ExplicitMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static ExplicitMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Amplitude& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Amplitude& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  ExplicitMatrix operator*(const ExplicitMatrix& rhs) const;
  std::vector<Amplitude> apply(std::span<const Amplitude> v) const;
  ExplicitMatrix adjoint() const;

  /// max |entry - other.entry|. Dimensions must match.
  double max_abs_diff(const ExplicitMatrix& other) const;

  /// max |(M M^dagger - I)_ij|.
  double unitarity_error() const;
  bool is_unitary(double tol = 1e-10) const { return unitarity_error() < tol; }

 private:
  std::size_t dim_;
  std::vector<Amplitude> entries_;
};

enum class OperatorKind {
  kWalshHadamard,  ///< W
  kReflection,     ///< R = diag(1, -1, ..., -1)
  kDiffusion,      ///< D, 2/N off-diagonal and -1 + 2/N on the diagonal
  kProjection,     ///< P, every entry 1/N
  kIdentity,
};

inline constexpr unsigned kExplicitMaxQubits = 8;

/// Builds the operator entry by entry from its closed-form definition.
/// Throws ConfigError for n outside [1, kExplicitMaxQubits].
ExplicitMatrix explicit_operator(OperatorKind kind, unsigned n);

/// diag(+-1) with -1 on the oracle's targets.
ExplicitMatrix explicit_oracle_flip(const Oracle& oracle);

}  // namespace qsearch
