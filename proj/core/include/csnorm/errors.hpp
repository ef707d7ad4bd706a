#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace csnorm {

enum class ErrorKind {
  Validation,
  Scope,
  DegenerateSlope,
  DegenerateInput,
  DegenerateCase,
  ResultantIdentityMismatch,
  SymmetryViolation,
  ConvergenceFailure,
  TrivialRootMismatch,
  LemmaViolation,
  AmbiguousT,
  NoT,
  SingularPoint,
  VerificationFailure,
  CountMismatch,
  SystemInconsistent,
  RankUnexpected,
  RankMismatch,
  ClosedFormMismatch,
  CommonRootSuspected,
  Io,
};

std::string_view kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::Scope: return "ScopeError";
    case ErrorKind::DegenerateSlope: return "DegenerateSlope";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::DegenerateCase: return "DegenerateCase";
    case ErrorKind::ResultantIdentityMismatch: return "ResultantIdentityMismatch";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::TrivialRootMismatch: return "TrivialRootMismatch";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::AmbiguousT: return "AmbiguousT";
    case ErrorKind::NoT: return "NoT";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::SystemInconsistent: return "SystemInconsistent";
    case ErrorKind::RankUnexpected: return "RankUnexpected";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::ClosedFormMismatch: return "ClosedFormMismatch";
    case ErrorKind::CommonRootSuspected: return "CommonRootSuspected";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

}  // namespace csnorm
