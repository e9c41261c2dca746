#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hybrid {

enum class ErrorCode {
  EmptyDegrees,
  DegreeBelowTwo,
  NotFano,
  AmbientTooSmall,
  AllLinear,
  HypersurfaceCase,
  NotHypersurface,
  HorizonTooSmall,
  EmptyHom,
  GuardExceeded,
  InvalidArgument,
};

/// Stable machine-readable name, e.g. "not_fano". Part of the CLI contract.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hybrid
