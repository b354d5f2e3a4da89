#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pstab {

enum class ErrorCode {
  InvalidLetter,
  RankMismatch,
  ClosedOnNonCyclicallyReduced,
  RankTooLarge,
  NotCoprime,
  NonFinite,
  DeterminantError,
  DegenerateAction,
  ImageIsLine,
  BadSubset,
  ParseError,
  InvalidArgument,
  InternalCheck,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported as pstab::Error; code() identifies the
// condition so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pstab
