#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace discrim {

enum class ErrorCode {
  NonHermitianInput,
  NonFiniteInput,
  ConvergenceFailure,
  DomainError,
  DimensionMismatch,
  InvalidState,
  NotNormalized,
  ProbabilityOutOfRange,
  MixedStateMember,
  WrongMemberCount,
  InconsistentInput,
  SchemaError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; the
// code distinguishes them for callers such as the CLI exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace discrim
