#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed symbol text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Coefficient data that does not describe a positive regular free polynomial.
class ValidationError : public Error {
public:
    enum class Kind {
        BadArity,
        EmptyWordTerm,
        NegativeCoefficient,
        LetterOutOfRange,
        DegreeOneNotPositive,
    };

    ValidationError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Arity or dimension mismatch between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A requested truncation would exceed the configured dimension cap.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An iterative routine failed to reach its stopping criterion.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace ncd
