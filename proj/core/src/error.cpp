#include "pstab/error.hpp"

namespace pstab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidLetter: return "InvalidLetter";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ClosedOnNonCyclicallyReduced: return "ClosedOnNonCyclicallyReduced";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DeterminantError: return "DeterminantError";
    case ErrorCode::DegenerateAction: return "DegenerateAction";
    case ErrorCode::ImageIsLine: return "ImageIsLine";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalCheck: return "InternalCheck";
  }
  return "Unknown";
}

}  // namespace pstab
