#pragma once

#include <stdexcept>
#include <string>

namespace sumint {

enum class ErrorCode {
  InvalidArgument,
  Unbounded,
  NotSumIntersecting,
  ComplementNotSumFree,
  CapExceeded,
  DimensionMismatch,
  Precondition,
  Internal,
};

// Every failure raised by the library carries one of the codes above so the C
// layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace sumint
