#pragma once

#include <stdexcept>
#include <string>

namespace zc {

enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotAPermutationRow,
  SizeLimitExceeded,
  NotNormal,
  IncompatibleOrder,
  DegreeTooHigh,
  DegreeUnsupported,
  NotACoboundary,
  NotACocycle,
  OrderMismatch,
  MismatchedContext,
  NonRationalResult,
  NotACharacter,
  QuotientNotCocycle,
  ParseError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

/// Library-wide exception carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAPermutationRow: return "NotAPermutationRow";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::IncompatibleOrder: return "IncompatibleOrder";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorKind::NotACoboundary: return "NotACoboundary";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::MismatchedContext: return "MismatchedContext";
    case ErrorKind::NonRationalResult: return "NonRationalResult";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::QuotientNotCocycle: return "QuotientNotCocycle";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace zc
