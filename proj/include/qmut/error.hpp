#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmut {

enum class ErrorCode {
  ConflictingEdge,
  LoopForbidden,
  IndexOutOfRange,
  LengthMismatch,
  EmptyVertexSet,
  InvalidArgument,
  Parse,
  TooLarge,
  CapsExceeded,
  HypothesisViolation,
  NotFiniteType,
  Io,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Domain error. The code is machine readable (the HTTP layer maps it to a
// status and echoes it), the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qmut
