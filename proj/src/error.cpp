#include "mt/error.hpp"

namespace mt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Budget: return "Budget";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::ActionLiftFailed: return "ActionLiftFailed";
    case ErrorKind::Collapse: return "Collapse";
    case ErrorKind::NotPPrime: return "NotPPrime";
    case ErrorKind::EmptyFiber: return "EmptyFiber";
    case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorKind::MismatchedLevels: return "MismatchedLevels";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NoAlpha: return "NoAlpha";
    case ErrorKind::IncompatibleLevels: return "IncompatibleLevels";
    case ErrorKind::NotPPerfect: return "NotPPerfect";
    case ErrorKind::NoInversePairs: return "NoInversePairs";
    case ErrorKind::EmptyNielsenClass: return "EmptyNielsenClass";
    case ErrorKind::CorruptCache: return "CorruptCache";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderExceeded:
    case ErrorKind::Overflow:
    case ErrorKind::Budget:
    case ErrorKind::TooLarge:
      return 2;
    case ErrorKind::EmptyNielsenClass:
    case ErrorKind::EmptyFiber:
      return 3;
    case ErrorKind::InvariantViolation:
    case ErrorKind::NonIntegralGenus:
    case ErrorKind::Collapse:
    case ErrorKind::NoAlpha:
      return 4;
    default:
      return 1;
  }
}

}  // namespace mt
