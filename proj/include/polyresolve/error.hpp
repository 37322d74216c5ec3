#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyresolve {

// Every precondition or internal-invariant failure in the library is reported
// through Error, tagged with one of these codes.
enum class Errc {
  SizeMismatch,
  NotEulerian,
  NotPCycle,
  InvalidResolution,
  ShapeMismatch,
  ThresholdViolated,
  NotPolycycle,
  NotAMatching,
  NotBalanced,
  SupportsOverlap,
  BadShape,
  NotTransversal,
  NotEdgeDisjoint,
  NotLinearForest,
  PreconditionViolated,
  NoCommonVertex,
  CrossingPairMissing,
  TooLarge,
  FamilyMismatch,
  InvalidInput,
  Internal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int index = -1);

  Errc code() const noexcept { return code_; }
  // Position of the offending element for indexed errors, -1 otherwise.
  int index() const noexcept { return index_; }

 private:
  Errc code_;
  int index_;
};

// Raises Errc::Internal with the message when the condition is false.  Used for
// invariants that the constructions guarantee; a failure is a library bug.
void ensure(bool condition, const char* message);

}  // namespace polyresolve
