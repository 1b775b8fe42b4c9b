#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

enum class ErrorCode {
  InvalidArgument,
  ModeMismatch,
  IndexOutOfRange,
  EmptySubset,
  TooLarge,
  ZeroMatrix,
  NotMandelstam,
  NonzeroDiagonal,
  IntransitiveZeros,
  InconsistentSigns,
  RankOutOfRange,
  EmptyStratum,
  Inadmissible,
  SamplingFailed,
  NotConverged,
  Incomparable,
  InconsistentAngles,
  LpFailure,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module. `witness` names the offending
/// indices (0-based) when the failure is attributable to a subset of the
/// ground set, e.g. a violating principal minor or an intransitive triple.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

}  // namespace strata
