#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riesz {

/// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: wrong domain, unsupported dimension, malformed file. The CLI
/// maps these to exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

/// A numerical contract was broken (an identity that must hold did not).
/// The CLI maps these to exit code 2.
class NumericalError : public Error {
public:
    using Error::Error;
};

class PoleError : public InputError {
public:
    PoleError(const std::string& what, double pole)
        : InputError(what), pole_(pole) {}
    double pole() const noexcept { return pole_; }

private:
    double pole_;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

class RangeError : public InputError {
public:
    using InputError::InputError;
};

class OverflowError : public InputError {
public:
    using InputError::InputError;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

class UnsupportedDimension : public InputError {
public:
    using InputError::InputError;
};

class ValidationError : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DegenerateFit : public InputError {
public:
    using InputError::InputError;
};

class CoincidentPointsError : public InputError {
public:
    CoincidentPointsError(std::size_t j, std::size_t k)
        : InputError("points " + std::to_string(j) + " and " + std::to_string(k) +
                     " coincide; energy is infinite for s >= 0"),
          first_(j), second_(k) {}
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

class NegativeVarianceError : public NumericalError {
public:
    NegativeVarianceError(const std::string& what, double value)
        : NumericalError(what), value_(value) {}
    double value() const noexcept { return value_; }

private:
    double value_;
};

}  // namespace riesz
