#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's domain (zero denominator, bad range, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// An operation that requires non-increasing nonnegative input got something else.
struct MonotonicityViolation : Error {
    explicit MonotonicityViolation(const std::string& what) : Error(what) {}
};

// Conjugate exponent requested for p = 1 (p' would be infinite).
struct ConjugateUndefined : Error {
    explicit ConjugateUndefined(const std::string& what) : Error(what) {}
};

// Malformed textual input; carries a line number when parsing files.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_number(line) {}
    std::size_t line_number;
};

}  // namespace hardylab
