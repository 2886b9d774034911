#include "qsearch/explicit_matrix.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

ExplicitMatrix ExplicitMatrix::identity(std::size_t dim) {
  ExplicitMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ExplicitMatrix ExplicitMatrix::operator*(const ExplicitMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw ConfigError("matrix dimension mismatch");
  ExplicitMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Amplitude lhs = (*this)(i, k);
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += lhs * rhs(k, j);
    }
  }
  return out;
}

std::vector<Amplitude> ExplicitMatrix::apply(std::span<const Amplitude> v) const {
  if (v.size() != dim_) throw ConfigError("vector length does not match matrix dimension");
  std::vector<Amplitude> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Amplitude acc{};
    for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ExplicitMatrix ExplicitMatrix::adjoint() const {
  ExplicitMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

double ExplicitMatrix::max_abs_diff(const ExplicitMatrix& other) const {
  if (other.dim_ != dim_) throw ConfigError("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  }
  return worst;
}

double ExplicitMatrix::unitarity_error() const {
  return ((*this) * adjoint()).max_abs_diff(identity(dim_));
}

ExplicitMatrix explicit_operator(OperatorKind kind, unsigned n) {
  if (n < 1 || n > kExplicitMaxQubits) {
    throw ConfigError("dense operators are limited to n <= " +
                      std::to_string(kExplicitMaxQubits) + ", got n = " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  const double inv_dim = 1.0 / static_cast<double>(dim);
  ExplicitMatrix m(dim);
  switch (kind) {
    case OperatorKind::kWalshHadamard: {
      const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
      for (std::size_t x = 0; x < dim; ++x) {
        for (std::size_t y = 0; y < dim; ++y) {
          m(x, y) = (std::popcount(x & y) % 2 == 0) ? amp : -amp;
        }
      }
      break;
    }
    case OperatorKind::kReflection:
      for (std::size_t i = 0; i < dim; ++i) m(i, i) = i == 0 ? 1.0 : -1.0;
      break;
    case OperatorKind::kDiffusion:
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = i == j ? -1.0 + 2.0 * inv_dim : 2.0 * inv_dim;
      }
      break;
    case OperatorKind::kProjection:
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = inv_dim;
      }
      break;
    case OperatorKind::kIdentity:
      return ExplicitMatrix::identity(dim);
  }
  return m;
}

ExplicitMatrix explicit_oracle_flip(const Oracle& oracle) {
  if (oracle.qubits() > kExplicitMaxQubits) {
    throw ConfigError("dense oracle flip is limited to n <= " + std::to_string(kExplicitMaxQubits));
  }
  ExplicitMatrix m = ExplicitMatrix::identity(oracle.state_count());
  for (const BasisIndex t : oracle.targets()) m(t, t) = -1.0;
  return m;
}

}  // namespace qsearch
