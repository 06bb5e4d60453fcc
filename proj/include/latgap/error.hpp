#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latgap {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  RankDeficient,
  SingularBasis,
  NotPrimitive,
  UnknownRhoK,
  DimensionTooSmall,
  LpInfeasible,
  LpUnbounded,
  NonGenericReducedCosts,
  NoIntegerSolution,
  CosetLimitExceeded,
  ResolutionTooFine,
  ResourceLimitExceeded,
};

std::string_view errorName(ErrorCode code);

// Resource guards (coset limit, grid resolution, enumeration budgets).
constexpr bool isResourceError(ErrorCode code) {
  return code == ErrorCode::CosetLimitExceeded ||
         code == ErrorCode::ResolutionTooFine ||
         code == ErrorCode::ResourceLimitExceeded;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(errorName(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace latgap
