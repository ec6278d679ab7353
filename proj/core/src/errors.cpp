#include "relaxfeas/errors.hpp"

namespace relaxfeas {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ZeroNormal: return "ZeroNormal";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::NotHomogenized: return "NotHomogenized";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::CombinationFailed: return "CombinationFailed";
    case ErrorCode::BadRadius: return "BadRadius";
    case ErrorCode::RadiusOverflow: return "RadiusOverflow";
    case ErrorCode::RoundingFailed: return "RoundingFailed";
    case ErrorCode::OracleLimitExceeded: return "OracleLimitExceeded";
  }
  return "Unknown";
}

}  // namespace relaxfeas
