#ifndef DAMPLAB_ERROR_HPP
#define DAMPLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace damplab {

enum class ErrorCode {
  NotHermitian,
  NotUnitTrace,
  NotPositive,
  InvalidState,
  NonTracePreserving,
  ParamOutOfRange,
  ParseError,
  UnknownState,
  IoError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace damplab

#endif  // DAMPLAB_ERROR_HPP
