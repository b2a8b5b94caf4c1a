#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyabc {

enum class ErrorKind {
  NotPrime,
  DivisionByZero,
  FieldMismatch,
  BothZero,
  ZeroPolynomial,
  NotCharP,
  DerivativeNonzero,
  ZeroWronskian,
  NotZeroSum,
  DivisibilityFailure,
  PreconditionViolated,
  WrongCharacteristic,
  CubeEqualsSquare,
  NotAssociated,
  ExponentsNotCoprime,
  NotFiniteField,
  SyntaxError,
  LiteralOutOfField,
  ConfigError,
  InternalInconsistency,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotCharP: return "NotCharP";
    case ErrorKind::DerivativeNonzero: return "DerivativeNonzero";
    case ErrorKind::ZeroWronskian: return "ZeroWronskian";
    case ErrorKind::NotZeroSum: return "NotZeroSum";
    case ErrorKind::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::CubeEqualsSquare: return "CubeEqualsSquare";
    case ErrorKind::NotAssociated: return "NotAssociated";
    case ErrorKind::ExponentsNotCoprime: return "ExponentsNotCoprime";
    case ErrorKind::NotFiniteField: return "NotFiniteField";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::LiteralOutOfField: return "LiteralOutOfField";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library. `hypothesis` names the failed
/// precondition for PreconditionViolated; `position` is the byte offset of a
/// SyntaxError.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::string> hypothesis = std::nullopt,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message),
        hypothesis_(std::move(hypothesis)),
        position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::optional<std::string>& hypothesis() const noexcept { return hypothesis_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<std::string> hypothesis_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

[[noreturn]] inline void precondition_failed(const std::string& hypothesis,
                                             const std::string& message) {
  throw Error(ErrorKind::PreconditionViolated, message, hypothesis);
}

}  // namespace polyabc
