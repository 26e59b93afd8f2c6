#pragma once

#include <stdexcept>
#include <string>

namespace greenform {

enum class ErrorCode {
  ParseError,
  UnknownObject,
  InfiniteOrbit,
  Hypothesis42Required,
  NotPolynomial,
  DivisionByZero,
  MissingCrossForm,
  InvalidRim,
  WindowTooSmall,
  InvalidArgument,
  IoError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace greenform
