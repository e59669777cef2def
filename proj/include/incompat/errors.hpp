#pragma once

#include <stdexcept>
#include <string>

namespace incompat {

// Failure categories, grouped by how the CLI maps them to exit codes:
// input/parse problems, violated mathematical preconditions, and
// enumeration budget refusals.
enum class ErrorCode {
  InvalidInput,
  ParseError,
  DimensionMismatch,
  NotHermitian,
  NotAFrame,
  NotTight,
  NotNormalized,
  ZeroVector,
  InvalidShape,
  TooFewColumns,
  ZeroCoherence,
  NotSpanning,
  Inadmissible,
  TooFewFrames,
  BudgetExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace incompat
