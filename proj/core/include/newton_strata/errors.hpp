#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace newton_strata {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  rank_mismatch,
  non_dominant_translation,
  not_superregular,
  twisted_unsupported,
  kappa_mismatch,
  incomparable_tops,
  malformed_slopes,
  not_comparable,
  limit_exceeded,
  precision_loss,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every recoverable failure of the library is reported through this type; the
// code lets callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace newton_strata
