#pragma once

#include <stdexcept>
#include <string>

namespace fwcodes {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration supplied by the caller.
struct ConfigError : Error {
    using Error::Error;
};

struct NotPrimeError : ConfigError {
    using ConfigError::ConfigError;
};
struct OutOfRangeError : ConfigError {
    using ConfigError::ConfigError;
};
struct DimensionMismatchError : ConfigError {
    using ConfigError::ConfigError;
};
struct NotASubsetError : ConfigError {
    using ConfigError::ConfigError;
};
struct EmptyComponentError : ConfigError {
    using ConfigError::ConfigError;
};
struct HypothesisError : ConfigError {
    using ConfigError::ConfigError;
};
struct ZeroCodeError : ConfigError {
    using ConfigError::ConfigError;
};

// Requested work exceeds the enumeration budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Conditions that are mathematically impossible for correct inputs; seeing one
// of these means the implementation is wrong, not the caller.
struct InternalError : Error {
    using Error::Error;
};
struct NonIntegralDivisionError : InternalError {
    using InternalError::InternalError;
};
struct NonIntegralDimensionError : InternalError {
    using InternalError::InternalError;
};
struct NonRationalOmegaError : InternalError {
    using InternalError::InternalError;
};

}  // namespace fwcodes
