#pragma once

#include <stdexcept>

namespace jmexpand {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested part is not present in the partition.
struct NoSuchPartError : Error {
  using Error::Error;
};

/// Malformed value: non-positive part, bad text syntax, inconsistent sizes.
struct InvalidInputError : Error {
  using Error::Error;
};

struct IndexOutOfRangeError : Error {
  using Error::Error;
};

/// An exhaustive expansion was requested beyond the configured size limits.
struct ResourceGuardError : Error {
  using Error::Error;
};

/// Class expansion requested for an element that is not central.
struct NotCentralError : Error {
  using Error::Error;
};

/// Coset expansion requested for an element that is not bi-invariant.
struct NotBiInvariantError : Error {
  using Error::Error;
};

/// Gram-Schmidt pivot vanished at the sampled deformation parameter.
struct DegenerateGramError : Error {
  using Error::Error;
};

struct SingularThetaError : Error {
  using Error::Error;
};

}  // namespace jmexpand
