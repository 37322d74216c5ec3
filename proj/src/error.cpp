#include "polyresolve/error.hpp"

namespace polyresolve {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotEulerian: return "NotEulerian";
    case Errc::NotPCycle: return "NotPCycle";
    case Errc::InvalidResolution: return "InvalidResolution";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ThresholdViolated: return "ThresholdViolated";
    case Errc::NotPolycycle: return "NotPolycycle";
    case Errc::NotAMatching: return "NotAMatching";
    case Errc::NotBalanced: return "NotBalanced";
    case Errc::SupportsOverlap: return "SupportsOverlap";
    case Errc::BadShape: return "BadShape";
    case Errc::NotTransversal: return "NotTransversal";
    case Errc::NotEdgeDisjoint: return "NotEdgeDisjoint";
    case Errc::NotLinearForest: return "NotLinearForest";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NoCommonVertex: return "NoCommonVertex";
    case Errc::CrossingPairMissing: return "CrossingPairMissing";
    case Errc::TooLarge: return "TooLarge";
    case Errc::FamilyMismatch: return "FamilyMismatch";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, int index)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      index_(index) {}

void ensure(bool condition, const char* message) {
  if (!condition) throw Error(Errc::Internal, message);
}

}  // namespace polyresolve
