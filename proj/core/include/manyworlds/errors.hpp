#pragma once

#include <stdexcept>
#include <string>

namespace manyworlds {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// A proposed basis failed the Gram-matrix identity check.
struct NotOrthonormal : Error {
    NotOrthonormal(const std::string& msg, double max_deviation)
        : Error(msg), max_deviation(max_deviation) {}
    double max_deviation;
};

/// Fewer vectors than the ambient dimension.
struct IncompleteBasis : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotUnitary : Error {
    using Error::Error;
};

struct NonFinite : Error {
    using Error::Error;
};

struct NotNormalized : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// A state and an observable (or two observables) do not share a world.
struct WorldMismatch : Error {
    using Error::Error;
};

/// Sequence arithmetic was asked to combine tails of different kinds.
struct IncompatibleTails : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace manyworlds
