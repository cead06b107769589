#pragma once

#include <stdexcept>
#include <string>

namespace matdist {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field construction was given a characteristic that is not an odd prime.
struct NotOddPrimeError : Error {
    using Error::Error;
};

/// An explicit extension modulus factors over the prime field.
struct ReducibleModulusError : Error {
    using Error::Error;
};

/// No built-in default modulus exists for the requested extension (q > 49).
struct NoDefaultModulusError : Error {
    using Error::Error;
};

/// A cyclotomic integer was asked for its rational value but is irrational.
struct NotRationalError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct FieldMismatchError : Error {
    using Error::Error;
};

/// A polynomial operation required a monic input.
struct NonMonicError : Error {
    using Error::Error;
};

/// An enumeration or sweep would exceed the configured budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

/// A character-sum identity produced a non-integral value where integrality
/// is provable; always indicates an implementation bug, never bad input.
struct NonIntegerResultError : Error {
    using Error::Error;
};

/// The exact Gauss-sum magnitude law failed; the core correctness oracle.
struct MagnitudeMismatchError : Error {
    using Error::Error;
};

/// Bad CLI / run configuration (unparsable field spec, negative budget, ...).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace matdist
