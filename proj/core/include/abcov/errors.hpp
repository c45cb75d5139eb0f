#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace abcov {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Modulus N < 1.
class InvalidModulusError : public Error {
public:
    using Error::Error;
};

/// Structurally bad input: wrong dimensions, empty matrix, zero vector where a
/// nonzero one is required.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A presentation row whose entries do not sum to zero mod N.
class ValidationError : public Error {
public:
    ValidationError(std::size_t row, std::string what)
        : Error(std::move(what)), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Subgroup enumeration hit the configured element cap.
class SizeCapError : public Error {
public:
    SizeCapError(std::size_t cap, std::size_t reached)
        : Error("subgroup closure exceeded cap of " + std::to_string(cap) +
                " elements (reached " + std::to_string(reached) + ")"),
          cap_(cap), reached_(reached) {}

    std::size_t cap() const noexcept { return cap_; }
    std::size_t reached() const noexcept { return reached_; }

private:
    std::size_t cap_;
    std::size_t reached_;
};

/// Operation requires t(r) = t(-r) = 2.
class EligibilityError : public Error {
public:
    using Error::Error;
};

/// A consistency assertion between two independent computations failed.
/// Always indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact rational arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Text input did not match the expected grammar.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Unknown export format or similar caller mistake.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace abcov
