#pragma once

#include <stdexcept>
#include <string>

namespace kirby4 {

enum class ErrorCode {
  MalformedInput,
  InvalidPD,
  FramingCountMismatch,
  IndexOutOfRange,
  LengthMismatch,
  NotAKnot,
  NotSymmetric,
  NotUnimodular,
  NotIndefinite,
  NotPositiveDefinite,
  RankMismatch,
  DimensionMismatch,
  InternalInvariantViolation,
  ResourceLimit,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kirby4
