#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bidegree {

enum class ErrorCode {
  EmptySequence,
  LengthMismatch,
  NegativeDegree,
  DegreeExceedsN,
  SumMismatch,
  EntryOutOfRange,
  InstanceTooLarge,
  InvalidStats,
  Infeasible,
  BadExponent,
  InvalidParameters,
  DimensionMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for every contract violation in the library; the
/// code identifies which precondition failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bidegree
