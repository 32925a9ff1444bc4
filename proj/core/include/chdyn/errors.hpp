#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chdyn {

enum class ErrorKind {
  NotFixed,
  NoConvergence,
  DerivativeVanishes,
  HalleyDenominatorVanishes,
  LambdaZero,
  DegenerateParameter,
  ParameterTooLarge,
  NoSignChange,
  InvalidBracket,
  CycleNotFound,
  NotMcMullenForm,
  DegenerateDelta,
  BranchUnresolved,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Typed failure of a mathematical precondition. The CLI maps these to exit 2.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// File-system failures from the writers. The CLI maps these to exit 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotFixed: return "NotFixed";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DerivativeVanishes: return "DerivativeVanishes";
    case ErrorKind::HalleyDenominatorVanishes: return "HalleyDenominatorVanishes";
    case ErrorKind::LambdaZero: return "LambdaZero";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::ParameterTooLarge: return "ParameterTooLarge";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::InvalidBracket: return "InvalidBracket";
    case ErrorKind::CycleNotFound: return "CycleNotFound";
    case ErrorKind::NotMcMullenForm: return "NotMcMullenForm";
    case ErrorKind::DegenerateDelta: return "DegenerateDelta";
    case ErrorKind::BranchUnresolved: return "BranchUnresolved";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace chdyn
