#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spdiv {

enum class ErrorKind {
  // metric
  kNotSquare,
  kNonFinite,
  kAsymmetricEntry,
  kNonzeroDiagonal,
  kNegativeDistance,
  kTriangleViolation,
  kInvalidK,
  kInvalidTheta,
  // graph parsing
  kParseError,
  kSelfLoop,
  kVertexOutOfRange,
  // sp-core
  kDuplicateIndex,
  kIndexOutOfRange,
  kEmptySubset,
  kSingularSimilarity,
  kDegenerateDenominator,
  kInvalidArgument,
  // selection / reduction
  kInstanceTooLarge,
  // verify
  kDominanceViolated,
  kNotDominant,
  kNotReductionStructure,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. `indices` carries the
// offending positions (matrix indices, line number, ...) in the order the
// error name lists them, e.g. TriangleViolation(i, j, k).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::size_t> indices = {})
      : std::runtime_error(std::move(message)), kind_(kind), indices_(std::move(indices)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

  // Failures that come from the numerics (singular systems, oversize
  // enumerations) rather than from malformed input.
  bool is_computational() const noexcept;

 private:
  ErrorKind kind_;
  std::vector<std::size_t> indices_;
};

}  // namespace spdiv
