#include "spdiv/error.hpp"

namespace spdiv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kAsymmetricEntry: return "AsymmetricEntry";
    case ErrorKind::kNonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::kNegativeDistance: return "NegativeDistance";
    case ErrorKind::kTriangleViolation: return "TriangleViolation";
    case ErrorKind::kInvalidK: return "InvalidK";
    case ErrorKind::kInvalidTheta: return "InvalidTheta";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::kDuplicateIndex: return "DuplicateIndex";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kEmptySubset: return "EmptySubset";
    case ErrorKind::kSingularSimilarity: return "SingularSimilarity";
    case ErrorKind::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::kDominanceViolated: return "DominanceViolated";
    case ErrorKind::kNotDominant: return "NotDominant";
    case ErrorKind::kNotReductionStructure: return "NotReductionStructure";
  }
  return "Unknown";
}

bool Error::is_computational() const noexcept {
  switch (kind_) {
    case ErrorKind::kSingularSimilarity:
    case ErrorKind::kDegenerateDenominator:
    case ErrorKind::kInstanceTooLarge:
    case ErrorKind::kDominanceViolated:
    case ErrorKind::kNotDominant:
      return true;
    default:
      return false;
  }
}

}  // namespace spdiv
