#pragma once

#include <stdexcept>
#include <string>

namespace mxmap {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument values: bad lag/dimension, series too short, k out of
/// range, self-loop edges, empty condition sets.
struct ParameterError : Error {
    using Error::Error;
};

/// Malformed or inconsistent input data: bad CSV rows, non-finite values,
/// duplicate or mismatched variable names.
struct DataError : Error {
    using Error::Error;
};

/// Numerically degenerate input, e.g. a zero-variance series for which a
/// correlation is undefined.
struct DegenerateInputError : Error {
    using Error::Error;
};

/// Partial correlation with a conditioning variable that is (numerically)
/// perfectly correlated with one of the arguments.
struct SingularConditioningError : DegenerateInputError {
    using DegenerateInputError::DegenerateInputError;
};

/// Trajectory generation failed to stabilize after the retry budget.
struct GenerationError : Error {
    using Error::Error;
};

} // namespace mxmap
