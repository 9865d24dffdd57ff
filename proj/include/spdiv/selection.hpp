#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "spdiv/metric.hpp"
#include "spdiv/sp_core.hpp"

namespace spdiv {

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;
inline constexpr double kDecideTolerance = 1e-9;

enum class SelectionMethod { kExact, kGreedyDrop, kGreedyAdd };

std::string_view to_string(SelectionMethod method);
// Accepts "exact", "greedy-drop", "greedy-add"; throws kInvalidArgument.
SelectionMethod parse_selection_method(std::string_view name);

struct SelectionResult {
  Subset subset;                // sorted
  double value = 0.0;           // SP of subset; 0 for the empty subset
  std::uint64_t evaluated = 0;  // number of candidate subsets scored
  std::uint64_t skipped = 0;    // candidates with singular similarity matrix
  SelectionMethod method = SelectionMethod::kExact;
};

struct SelectionOptions {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

// Calls visit(subset) for every size-k subset of {0..n-1} in lexicographic
// order; stops early when visit returns false.
template <typename Visitor>
void for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return;
  Subset subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    if (!visit(static_cast<const Subset&>(subset))) return;
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// Maximum SP over all size-k subsets. Singular candidates are skipped; ties go
// to the lexicographically smallest subset. Throws kInvalidK, kInstanceTooLarge,
// and kSingularSimilarity when every candidate is singular.
SelectionResult exact_select(const FiniteMetric& metric, std::size_t k, double theta,
                             const SelectionOptions& options = {});

// Backward elimination from the full set.
SelectionResult greedy_drop(const FiniteMetric& metric, std::size_t k, double theta);

// Forward insertion seeded with point 0.
SelectionResult greedy_add(const FiniteMetric& metric, std::size_t k, double theta);

SelectionResult select(const FiniteMetric& metric, std::size_t k, double theta,
                       SelectionMethod method, const SelectionOptions& options = {});

struct Decision {
  bool feasible = false;
  std::optional<Subset> witness;  // set iff feasible
  double best_value = 0.0;
  double threshold = 0.0;
};

// Is there a size-k subset with SP >= threshold - kDecideTolerance?
Decision decide(const FiniteMetric& metric, std::size_t k, double theta, double threshold,
                const SelectionOptions& options = {});

}  // namespace spdiv
