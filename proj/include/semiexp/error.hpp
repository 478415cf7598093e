#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semiexp {

enum class ErrorCode {
  OutOfRange,
  NotAssociative,
  PreconditionViolated,
  RingMismatch,
  SemigroupMismatch,
  DimensionMismatch,
  ShapeMismatch,
  NotContractive,
  Budget,
  NoLeftIdentity,
  ZeroElement,
  NotInvertible,
  InvalidGroup,
  NotInverse,
  IdentitySolveFailed,
  UnknownFamily,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` names the
// failing contract and `what()` carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semiexp
