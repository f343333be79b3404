#include "braidroots/error.hpp"

namespace braidroots {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::StrandCountMismatch:
        return "StrandCountMismatch";
      case ErrorCode::IndexOutOfRange:
        return "IndexOutOfRange";
      case ErrorCode::EmptyKeepSet:
        return "EmptyKeepSet";
      case ErrorCode::NotOnePure:
        return "NotOnePure";
      case ErrorCode::DegreeMismatch:
        return "DegreeMismatch";
      case ErrorCode::ShapeMismatch:
        return "ShapeMismatch";
      case ErrorCode::NotStandardlyReduced:
        return "NotStandardlyReduced";
      case ErrorCode::NotPeriodic:
        return "NotPeriodic";
      case ErrorCode::CentralInput:
        return "CentralInput";
      case ErrorCode::BoundExceeded:
        return "BoundExceeded";
      case ErrorCode::HypothesisViolated:
        return "HypothesisViolated";
      case ErrorCode::ExteriorMismatch:
        return "ExteriorMismatch";
      case ErrorCode::HintRequired:
        return "HintRequired";
      case ErrorCode::NotPeriodicExterior:
        return "NotPeriodicExterior";
      case ErrorCode::CentralExterior:
        return "CentralExterior";
      case ErrorCode::NotApplicable:
        return "NotApplicable";
      case ErrorCode::NotMember:
        return "NotMember";
      case ErrorCode::ParseError:
        return "ParseError";
      case ErrorCode::InternalIdentityViolated:
        return "InternalIdentityViolated";
      case ErrorCode::VerificationFailed:
        return "VerificationFailed";
    }
    return "Unknown";
  }

}  // namespace braidroots
