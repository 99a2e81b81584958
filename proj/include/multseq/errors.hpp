#pragma once

#include <stdexcept>
#include <string>

namespace multseq {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgumentError : Error {
  using Error::Error;
};
struct RingMismatchError : Error {
  using Error::Error;
};
struct DimensionMismatchError : Error {
  using Error::Error;
};
/// Zero or unit ideal passed to an operation that needs a proper nonzero one.
struct ImproperIdealError : Error {
  using Error::Error;
};
struct NotMPrimaryError : Error {
  using Error::Error;
};
/// Exponent arithmetic exceeded the machine-width guard.
struct OverflowError : Error {
  using Error::Error;
};
/// An intermediate object grew past a configured cap.
struct ResourceCapError : Error {
  using Error::Error;
};
/// The adaptive grid driver hit its size cap; the message carries the last
/// grid size and the failing points.
struct GridCapError : Error {
  using Error::Error;
};
/// Bivariate interpolation failed: singular system, or coefficients that are
/// not nonnegative integers (a sign the grid was too small).
struct FitError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
/// A growth-based estimate did not stabilize within the sampled range.
struct InconclusiveError : Error {
  using Error::Error;
};
/// Internal invariant violation.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace multseq
