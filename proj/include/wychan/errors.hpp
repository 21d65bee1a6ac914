#pragma once

#include <stdexcept>

namespace wychan {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible with the requested operation.
struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotHermitian : Error {
  using Error::Error;
};
struct NotUnitTrace : Error {
  using Error::Error;
};
struct NotPositiveSemidefinite : Error {
  using Error::Error;
};
struct NotTracePreserving : Error {
  using Error::Error;
};
struct NotUnitary : Error {
  using Error::Error;
};
struct BlochVectorTooLong : Error {
  using Error::Error;
};
struct ParameterOutOfRange : Error {
  using Error::Error;
};
struct ConvergenceFailure : Error {
  using Error::Error;
};
struct NoFeasibleSample : Error {
  using Error::Error;
};
struct UnknownProperty : Error {
  using Error::Error;
};

/// A provably nonnegative quantity (or an internal cross-check) came out
/// worse than float noise can explain; indicates an implementation bug,
/// never bad user input.
struct InternalInconsistency : Error {
  using Error::Error;
};

/// Structured-input parse failure; the message names the offending field path.
struct ParseError : Error {
  using Error::Error;
};

/// Command was given the wrong number of channels for the requested relation.
struct ArityMismatch : Error {
  using Error::Error;
};

/// Requested sweep parameter does not apply to the given state/channels.
struct SweepInapplicable : Error {
  using Error::Error;
};

}  // namespace wychan
