#include "discrim/error.hpp"

namespace discrim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::MixedStateMember: return "MixedStateMember";
    case ErrorCode::WrongMemberCount: return "WrongMemberCount";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace discrim
