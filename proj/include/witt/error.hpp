#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittlab {

enum class ErrorCode {
  CompositePrime,
  ReduciblePolynomial,
  BadDegree,
  BadPrecision,
  CapacityExceeded,
  ContextMismatch,
  NotAUnit,
  NotDivisible,
  PrecisionUnderflow,
  HenselFailure,
  OddPrimeRequired,
  NotInGhostImage,
  BadLevel,
  InternalNonzeroLead,
  NotInKernel,
  BadInput,
  InternalError,
};

std::string_view error_name(ErrorCode code) noexcept;

class WittError : public std::runtime_error {
 public:
  WittError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the error-name prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw WittError(code, message);
}

}  // namespace wittlab
