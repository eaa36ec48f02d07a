#ifndef IHULL_ERRORS_HPP
#define IHULL_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "ihull/rational.hpp"

namespace ihull {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sign or branch could not be decided at the current truncation order or
/// precision. `exponent()` names the blocking exponent when there is one, so
/// the caller can retry with a higher order or more bits.
class Indeterminate : public Error {
public:
    explicit Indeterminate(const std::string& what, std::optional<Rational> exponent = std::nullopt)
        : Error(what + (exponent ? " (blocking exponent " + to_string(*exponent) + ")" : "")),
          exponent_(std::move(exponent))
    {
    }

    const std::optional<Rational>& exponent() const noexcept { return exponent_; }

private:
    std::optional<Rational> exponent_;
};

class ZeroOrUnknownLeading : public Error {
public:
    using Error::Error;
};

class NotPositive : public Error {
public:
    using Error::Error;
};

/// Input is infinite, or its magnitude cannot be classified.
class NotFinite : public Error {
public:
    using Error::Error;
};

class NotStandard : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class SpaceMismatch : public Error {
public:
    using Error::Error;
};

class InvalidPoint : public Error {
public:
    using Error::Error;
};

class BranchIndeterminate : public Indeterminate {
public:
    using Indeterminate::Indeterminate;
};

class OutOfWindow : public Error {
public:
    using Error::Error;
};

/// Malformed number literal or expression; `position()` is a 0-based offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), message_(what), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

} // namespace ihull

#endif
