#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

/// Malformed arguments or input data (bad indices, dimension mismatch,
/// unparseable rationals, singular basis change, ...).
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A constructed object violates a structural law it is required to satisfy,
/// e.g. a bracket table that fails the Jacobi identity.
class structural_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace liecoh
