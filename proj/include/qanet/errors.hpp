#pragma once

#include <stdexcept>
#include <string>

namespace qanet {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (dimension mismatch, bad broadcast, ...).
struct ShapeError : Error {
    using Error::Error;
};

/// Values violate an operation's contract (NaN/Inf, division by zero,
/// out-of-range pixel, empty reduction, ...).
struct ValueError : Error {
    using Error::Error;
};

/// A configuration object fails its invariants.
struct ConfigError : Error {
    using Error::Error;
};

/// File / serialization problems; the message names the offending path.
struct IoError : Error {
    using Error::Error;
};

}  // namespace qanet
