#pragma once

#include <stdexcept>
#include <string>

namespace chern {

enum class ErrorCode {
  InvalidInput,
  InvalidLinearSpace,
  UnsupportedOrder,
  NotAMatroid,
  TooLarge,
  RankError,
  LoopError,
  DimensionError,
  BalancingViolation,
  LiftFailure,
  InvalidExponents,
  InvalidFlat,
  ParseError,
  ColoopError,
  Overflow,
};

const char* error_code_name(ErrorCode code);

class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw MatroidError(code, what);
}

}  // namespace chern
