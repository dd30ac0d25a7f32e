#pragma once

#include <stdexcept>
#include <string>

namespace extdep {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input sizes do not agree (vector length vs model dimension, partition vs model, ...).
struct DimensionError : Error {
  using Error::Error;
};

// A numeric argument or model parameter violates its stated domain.
struct DomainError : Error {
  using Error::Error;
};

// Family id or mixture component id is not in the catalog.
struct UnknownFamilyError : Error {
  using Error::Error;
};

// The model admits no exact sampler.
struct NotSimulableError : Error {
  using Error::Error;
};

// Dataset or estimator tuning fails validation.
struct DataError : Error {
  using Error::Error;
};

// Requested evaluation grid exceeds the hard size limit.
struct GridError : Error {
  using Error::Error;
};

}  // namespace extdep
