#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hahn {

enum class ErrorKind {
  UndecidableComparison,
  GroupMismatch,
  NotAdmissible,
  NotInvertibleConstant,
  IterationCapExceeded,
  DivisionByZeroSeries,
  BranchCutHit,
  UnsupportedGroup,
  DimensionCapExceeded,
  RadiusExceeded,
  NearIntegerOrder,
  DomainError,
  QuadratureBudgetExceeded,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UndecidableComparison: return "UndecidableComparison";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotInvertibleConstant: return "NotInvertibleConstant";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case ErrorKind::BranchCutHit: return "BranchCutHit";
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::RadiusExceeded: return "RadiusExceeded";
    case ErrorKind::NearIntegerOrder: return "NearIntegerOrder";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::QuadratureBudgetExceeded: return "QuadratureBudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every expected domain failure in the library is reported through this
/// exception; `kind()` is stable and machine readable.
class HahnError : public std::runtime_error {
 public:
  HahnError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hahn
