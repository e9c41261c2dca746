#include "hybrid/error.hpp"

namespace hybrid {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyDegrees: return "empty_degrees";
    case ErrorCode::DegreeBelowTwo: return "degree_below_two";
    case ErrorCode::NotFano: return "not_fano";
    case ErrorCode::AmbientTooSmall: return "ambient_too_small";
    case ErrorCode::AllLinear: return "all_linear";
    case ErrorCode::HypersurfaceCase: return "hypersurface_case";
    case ErrorCode::NotHypersurface: return "not_hypersurface";
    case ErrorCode::HorizonTooSmall: return "horizon_too_small";
    case ErrorCode::EmptyHom: return "empty_hom";
    case ErrorCode::GuardExceeded: return "guard_exceeded";
    case ErrorCode::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace hybrid
