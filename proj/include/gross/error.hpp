#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gross {

// Domain errors raised by arithmetic and theory operations.
enum class ErrorKind {
  DivisionByZero,
  NotRepresentable,
  ZeroToNegativePower,
  NonIntegerExponent,
  NonPositivePoint,
  NotLambdaForm,
  LambdaNotSquare,
  NotPrimeParameter,
  NegativeM,
  PrimeExceedsBound,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// Raised by the expression parser; `position` is 1-based and counts
// code points, not bytes.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& expected)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace gross
