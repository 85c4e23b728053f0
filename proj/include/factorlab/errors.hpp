#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace factorlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (element not in the monoid, dimension mismatch, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Spec text that does not follow the canonical grammar or violates a family invariant.
class ParseError : public Error {
public:
    using Error::Error;
};

/// The operation is not defined for the requested family.
class UnsupportedOperation : public Error {
public:
    using Error::Error;
};

/// A search hit one of its explicit budgets. Carries the amount of work done so far.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t partial)
        : Error(what + " (partial count " + std::to_string(partial) + ")"), partial_(partial) {}

    std::size_t partial_count() const noexcept { return partial_; }

private:
    std::size_t partial_;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantBreach : public Error {
public:
    using Error::Error;
};

} // namespace factorlab
