#pragma once

#include <stdexcept>
#include <string>

namespace etri {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed shapes: dimension mismatches, unparsable documents.
struct StructuralError : Error {
    using Error::Error;
};

/// A model or data invariant does not hold (weights, thresholds, profile sets, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// An operation was called outside its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

/// An enumeration or search exceeded its configured cap.
struct ResourceError : Error {
    using Error::Error;
};

}  // namespace etri
