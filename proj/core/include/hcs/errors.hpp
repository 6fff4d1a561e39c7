#pragma once

#include <stdexcept>
#include <string>

namespace hcs {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A table, number, or file fails structural validation: bad dimension,
/// index out of range, duplicate targets in a cell, a claimed unit the table
/// contradicts, malformed catalog contents.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Operands belong to different systems, or an operation was invoked on a
/// system it is not defined for (e.g. a closed form on the wrong algebra).
class SystemMismatchError : public Error {
public:
    using Error::Error;
};

/// The algebra has no two-sided multiplicative identity.
class NoUnitError : public Error {
public:
    using Error::Error;
};

/// Non-real eigenvalues could not be matched into conjugate pairs.
class SpectralPairingError : public Error {
public:
    using Error::Error;
};

/// The eigen-mode method found a numerically defective spectrum; the caller
/// should fall back to the matrix exponential route.
class DegenerateSpectrumError : public Error {
public:
    using Error::Error;
};

/// An iterative method exhausted its budget without meeting its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Two internal routes to the same quantity disagreed beyond tolerance.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// A named item is absent from the catalog.
class NotFoundError : public Error {
public:
    using Error::Error;
};

} // namespace hcs
