#pragma once

#include <stdexcept>
#include <string>

namespace qsearch {

/// Invalid run parameters: qubit count over the cap, empty target set, bad flags.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A basis index or count that does not fit the register.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The state vector lost normalization or picked up a non-finite amplitude.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked identity failed where it must hold unconditionally; indicates a bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qsearch
