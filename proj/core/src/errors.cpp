#include "newton_strata/errors.hpp"

namespace newton_strata {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::rank_mismatch: return "RankMismatch";
    case ErrorCode::non_dominant_translation: return "NonDominantTranslation";
    case ErrorCode::not_superregular: return "NotSuperregular";
    case ErrorCode::twisted_unsupported: return "TwistedUnsupported";
    case ErrorCode::kappa_mismatch: return "KappaMismatch";
    case ErrorCode::incomparable_tops: return "IncomparableTops";
    case ErrorCode::malformed_slopes: return "MalformedSlopes";
    case ErrorCode::not_comparable: return "NotComparable";
    case ErrorCode::limit_exceeded: return "LimitExceeded";
    case ErrorCode::precision_loss: return "PrecisionLoss";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace newton_strata
