#pragma once

#include <stdexcept>
#include <string>

namespace fukaya {

// Mirrors the fk_status codes of the C API one to one.
enum class ErrorCode {
  InvalidInput = 1,
  InvalidRing = 2,
  InvalidComplex = 3,
  InvalidGraph = 4,
  LoopContraction = 5,
  DegenerateResult = 6,
  NotClosed = 7,
  Io = 8,
  Internal = 9,
  NullArgument = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace fukaya
