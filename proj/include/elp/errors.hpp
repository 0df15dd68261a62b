#ifndef ELP_ERRORS_HPP
#define ELP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace elp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the parser; carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + message),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

/// An operation was called outside its contract (non-ground input,
/// subjective literals where an objective program is required, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message) : Error(message) {}
};

/// A configured search cap (atom count, subjective literal count) was exceeded.
class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& message) : Error(message) {}
};

/// A constraint is violated by the least model of a positive program.
class UnsatisfiableError : public Error {
public:
    explicit UnsatisfiableError(const std::string& message) : Error(message) {}
};

/// The given atom set is not an epistemic splitting set of the program.
class InvalidSplittingError : public Error {
public:
    explicit InvalidSplittingError(const std::string& message) : Error(message) {}
};

} // namespace elp

#endif
