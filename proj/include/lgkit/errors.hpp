#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgkit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. Carries a 1-based location when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"
                     : what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Shapes, variable counts or superpotentials do not match.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Arguments outside an operation's domain (k out of range, zero factor, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A computation finished without being able to decide its answer.
class InconclusiveError : public Error {
public:
    using Error::Error;
};

// A configured resource bound (pair queue, matrix size) was exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace lgkit
