#pragma once

#include <stdexcept>

namespace cyclocond {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside an operation's documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A numeric tolerance check failed at the current precision. Callers are
/// expected to retry at a higher precision.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Precision escalation reached the configured ceiling without converging.
class PrecisionCeilingError : public Error {
public:
    using Error::Error;
};

/// An exact computation produced an impossible result (e.g. a nonzero
/// remainder in a division that must be exact).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace cyclocond
