#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace perfclosure {

enum class ErrorKind {
  InvalidConfig,
  InvalidArgument,
  IncompatibleFields,
  ZeroDenominator,
  DivisionByZero,
  ZeroDivisor,
  WrongCoefficientField,
  BoundsExceeded,
  MultivariateUnsupported,
  PerfectCoefficients,
  NotIrreducible,
  NotTranscendental,
  InvalidDescriptor,
  SyntaxError,
  UnknownVariable,
  NonCanonicalExponent,
  NotPolynomial,
  MalformedCertificate,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the text parser; carries the 0-based column of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace perfclosure
