#include "perfclosure/error.hpp"

namespace perfclosure {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IncompatibleFields: return "IncompatibleFields";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::WrongCoefficientField: return "WrongCoefficientField";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
    case ErrorKind::MultivariateUnsupported: return "MultivariateUnsupported";
    case ErrorKind::PerfectCoefficients: return "PerfectCoefficients";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotTranscendental: return "NotTranscendental";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonCanonicalExponent: return "NonCanonicalExponent";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, std::size_t position, const std::string& message)
    : Error(kind, message + " (at column " + std::to_string(position) + ")"), position_(position) {}

}  // namespace perfclosure
