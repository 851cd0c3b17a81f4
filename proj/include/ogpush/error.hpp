#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ogpush {

enum class ErrorCode {
  NotDivisible,
  NotPolynomial,
  NotLaurentPolynomial,
  NotSimplePole,
  NonlinearFactor,
  NotSymmetric,
  UnsupportedRoute,
  SyntaxError,
  IndexOutOfRange,
  NonPartition,
  UnexpectedVariable,
  DimensionMismatch,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Single exception type for the engine; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Error(ErrorCode code, const std::string& what, std::size_t position)
      : std::runtime_error(std::string(to_string(code)) + " at position " +
                           std::to_string(position) + ": " + what),
        code_(code),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  // Only meaningful for SyntaxError.
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::size_t position_ = 0;
};

}  // namespace ogpush
