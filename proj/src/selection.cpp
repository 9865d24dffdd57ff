#include "spdiv/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spdiv/error.hpp"

namespace spdiv {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_k(const FiniteMetric& metric, std::size_t k) {
  if (k > metric.size()) {
    throw Error(ErrorKind::kInvalidK, "InvalidK: k=" + std::to_string(k) + " exceeds n=" +
                                          std::to_string(metric.size()));
  }
}

void check_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw Error(ErrorKind::kInvalidTheta, "InvalidTheta: theta must be positive and finite");
  }
}

// SP with the empty set mapped to 0 and singular subsets mapped to -inf.
double score(const FiniteMetric& metric, const Subset& subset, double theta) {
  if (subset.empty()) return 0.0;
  try {
    return sp_value(metric, subset, theta).sp_value;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kSingularSimilarity) return kNegInf;
    throw;
  }
}

}  // namespace

std::string_view to_string(SelectionMethod method) {
  switch (method) {
    case SelectionMethod::kExact: return "exact";
    case SelectionMethod::kGreedyDrop: return "greedy-drop";
    case SelectionMethod::kGreedyAdd: return "greedy-add";
  }
  return "unknown";
}

SelectionMethod parse_selection_method(std::string_view name) {
  if (name == "exact") return SelectionMethod::kExact;
  if (name == "greedy-drop") return SelectionMethod::kGreedyDrop;
  if (name == "greedy-add") return SelectionMethod::kGreedyAdd;
  throw Error(ErrorKind::kInvalidArgument, "unknown selection method '" + std::string(name) +
                                               "' (expected exact, greedy-drop, greedy-add)");
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact while it fits: result * (n - i) / (i + 1) stays integral at each step.
  unsigned __int128 result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

SelectionResult exact_select(const FiniteMetric& metric, std::size_t k, double theta,
                             const SelectionOptions& options) {
  check_k(metric, k);
  check_theta(theta);
  const std::uint64_t candidates = binomial(metric.size(), k);
  if (candidates > options.enumeration_cap) {
    throw Error(ErrorKind::kInstanceTooLarge,
                "InstanceTooLarge: C(" + std::to_string(metric.size()) + "," +
                    std::to_string(k) + ") = " + std::to_string(candidates) +
                    " exceeds the enumeration cap " + std::to_string(options.enumeration_cap));
  }

  SelectionResult best;
  best.method = SelectionMethod::kExact;
  best.value = kNegInf;
  for_each_combination(metric.size(), k, [&](const Subset& subset) {
    const double value = score(metric, subset, theta);
    ++best.evaluated;
    if (value == kNegInf) {
      ++best.skipped;
    } else if (value > best.value) {
      best.value = value;
      best.subset = subset;
    }
    return true;
  });

  if (best.value == kNegInf) {
    throw Error(ErrorKind::kSingularSimilarity,
                "SingularSimilarity: every size-" + std::to_string(k) +
                    " subset has a singular similarity matrix");
  }
  return best;
}

SelectionResult greedy_drop(const FiniteMetric& metric, std::size_t k, double theta) {
  check_k(metric, k);
  check_theta(theta);
  SelectionResult result;
  result.method = SelectionMethod::kGreedyDrop;
  for (std::size_t i = 0; i < metric.size(); ++i) result.subset.push_back(i);

  if (!result.subset.empty()) {
    result.value = sp_value(metric, result.subset, theta).sp_value;
    ++result.evaluated;
  }

  Subset remainder;
  while (result.subset.size() > k) {
    double best_value = kNegInf;
    std::size_t best_pos = result.subset.size();
    for (std::size_t pos = 0; pos < result.subset.size(); ++pos) {
      remainder.assign(result.subset.begin(), result.subset.end());
      remainder.erase(remainder.begin() + static_cast<std::ptrdiff_t>(pos));
      const double value = score(metric, remainder, theta);
      ++result.evaluated;
      if (value == kNegInf) {
        ++result.skipped;
      } else if (value > best_value) {
        best_value = value;
        best_pos = pos;
      }
    }
    if (best_pos == result.subset.size()) {
      throw Error(ErrorKind::kSingularSimilarity,
                  "SingularSimilarity: every deletion leaves a singular similarity matrix");
    }
    result.subset.erase(result.subset.begin() + static_cast<std::ptrdiff_t>(best_pos));
    result.value = best_value;
  }
  return result;
}

SelectionResult greedy_add(const FiniteMetric& metric, std::size_t k, double theta) {
  check_k(metric, k);
  check_theta(theta);
  SelectionResult result;
  result.method = SelectionMethod::kGreedyAdd;
  if (k == 0) return result;

  result.subset.push_back(0);
  result.value = 1.0;
  ++result.evaluated;

  std::vector<bool> chosen(metric.size(), false);
  chosen[0] = true;
  Subset candidate;
  while (result.subset.size() < k) {
    double best_value = kNegInf;
    std::size_t best_point = metric.size();
    for (std::size_t x = 0; x < metric.size(); ++x) {
      if (chosen[x]) continue;
      candidate = result.subset;
      candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), x), x);
      const double value = score(metric, candidate, theta);
      ++result.evaluated;
      if (value == kNegInf) {
        ++result.skipped;
      } else if (value > best_value) {
        best_value = value;
        best_point = x;
      }
    }
    if (best_point == metric.size()) {
      throw Error(ErrorKind::kSingularSimilarity,
                  "SingularSimilarity: every extension has a singular similarity matrix");
    }
    chosen[best_point] = true;
    result.subset.insert(
        std::upper_bound(result.subset.begin(), result.subset.end(), best_point), best_point);
    result.value = best_value;
  }
  return result;
}

SelectionResult select(const FiniteMetric& metric, std::size_t k, double theta,
                       SelectionMethod method, const SelectionOptions& options) {
  switch (method) {
    case SelectionMethod::kExact: return exact_select(metric, k, theta, options);
    case SelectionMethod::kGreedyDrop: return greedy_drop(metric, k, theta);
    case SelectionMethod::kGreedyAdd: return greedy_add(metric, k, theta);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown selection method");
}

Decision decide(const FiniteMetric& metric, std::size_t k, double theta, double threshold,
                const SelectionOptions& options) {
  if (std::isnan(threshold)) {
    throw Error(ErrorKind::kInvalidArgument, "threshold must not be NaN");
  }
  const SelectionResult best = exact_select(metric, k, theta, options);
  Decision d;
  d.best_value = best.value;
  d.threshold = threshold;
  d.feasible = best.value >= threshold - kDecideTolerance;
  if (d.feasible) d.witness = best.subset;
  return d;
}

}  // namespace spdiv
