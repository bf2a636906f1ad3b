#pragma once

#include <stdexcept>
#include <string>

namespace mt {

enum class ErrorKind {
  OrderExceeded,
  Overflow,
  Budget,
  DimensionMismatch,
  NotASubgroup,
  TooLarge,
  NotInvolution,
  ActionLiftFailed,
  Collapse,
  NotPPrime,
  EmptyFiber,
  NonIntegralGenus,
  MismatchedLevels,
  HypothesisUnmet,
  RankDeficient,
  NoAlpha,
  IncompatibleLevels,
  NotPPerfect,
  NoInversePairs,
  EmptyNielsenClass,
  CorruptCache,
  InvariantViolation,
  Parse,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit code for an error family: 2 budget, 3 empty Nielsen class,
// 4 invariant violation, 1 for everything else.
int exit_code(ErrorKind kind);

}  // namespace mt
