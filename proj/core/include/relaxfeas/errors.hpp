#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relaxfeas {

enum class ErrorCode {
  RankDeficient,
  ZeroNormal,
  DimensionMismatch,
  InvalidSystem,
  NotHomogenized,
  ParseError,
  IoError,
  PreconditionViolated,
  CombinationFailed,
  BadRadius,
  RadiusOverflow,
  RoundingFailed,
  OracleLimitExceeded,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. Every throw site in relaxfeas uses this type so
/// callers can switch on code() instead of parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace relaxfeas
