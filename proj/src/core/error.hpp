#pragma once

#include <stdexcept>
#include <string>

namespace prr {

enum class ErrorCode {
  InvalidGeometry,
  InvalidArgument,
  UnreachablePose,
  UnreachablePosition,
  SerialSingular,
  ParallelSingular,
  DegenerateLength,
  NoSymmetricConfig,
  EmptyWorkspace,
  RegionTooSmall,
  ParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, std::string(error_name(code)) + ": " + msg);
}

}  // namespace prr
