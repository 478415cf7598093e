#include "semiexp/error.hpp"

namespace semiexp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::SemigroupMismatch: return "SemigroupMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotContractive: return "NotContractive";
    case ErrorCode::Budget: return "Budget";
    case ErrorCode::NoLeftIdentity: return "NoLeftIdentity";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::NotInverse: return "NotInverse";
    case ErrorCode::IdentitySolveFailed: return "IdentitySolveFailed";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace semiexp
