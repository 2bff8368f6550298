#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The prime sieve cannot reach the requested range without raising its capacity.
class CapacityExceeded : public Error {
public:
    using Error::Error;
};

/// The computation is beyond the configured desk-scale budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A construction that must always succeed did not (signals a bug).
class ConstructionFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace seqlab
