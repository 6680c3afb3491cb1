#pragma once

#include <stdexcept>
#include <string>

namespace cotrop {

enum class ErrorCode {
  ZeroSeries,
  UnsupportedDimension,
  EmptyTruncation,
  EmptyCurve,
  OutOfRange,
  NotNormalized,
  NotSimplex,
  NotMaximallySparse,
  InvalidEdge,
  NotTriangulation,
  UnsupportedCell,
  IllegalResolution,
  SizeMismatch,
  EmptyInput,
  TargetMismatch,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorCode code);

// Input problems the caller can fix (bad schema, parameter out of range)
// as opposed to inputs the algorithms cannot process.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cotrop
