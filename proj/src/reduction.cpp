#include "spdiv/reduction.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "spdiv/error.hpp"

namespace spdiv {

double SuiteRng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t SuiteRng::below(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "below(0) has no valid result");
  const std::uint64_t bound = static_cast<std::uint64_t>(m);
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % bound);
}

Graph random_graph(SuiteRng& rng, std::size_t n, double edge_probability) {
  std::vector<Graph::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform01() < edge_probability) edges.emplace_back(u, v);
  return Graph(n, edges);
}

IndependentSetResult brute_force_is(const Graph& g, std::size_t k,
                                    const SelectionOptions& options) {
  if (k > g.size()) {
    throw Error(ErrorKind::kInvalidK,
                "InvalidK: k=" + std::to_string(k) + " exceeds n=" + std::to_string(g.size()));
  }
  const std::uint64_t candidates = binomial(g.size(), k);
  if (candidates > options.enumeration_cap) {
    throw Error(ErrorKind::kInstanceTooLarge,
                "InstanceTooLarge: C(" + std::to_string(g.size()) + "," + std::to_string(k) +
                    ") exceeds the enumeration cap");
  }
  IndependentSetResult result;
  for_each_combination(g.size(), k, [&](const Subset& subset) {
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = i + 1; j < subset.size(); ++j)
        if (g.adjacent(subset[i], subset[j])) return true;
    result.found = true;
    result.witness = subset;
    return false;
  });
  return result;
}

EquivalenceOutcome solve_is_via_sp(const Graph& g, std::size_t k, double theta0,
                                   const SelectionOptions& options) {
  const auto [metric, instance] = encode_graph(g, k, theta0);
  const Decision decision = decide(metric, k, theta0, instance.params.threshold, options);
  const IndependentSetResult oracle = brute_force_is(g, k, options);

  EquivalenceOutcome out;
  out.n = g.size();
  out.edge_count = g.edges().size();
  out.k = k;
  out.theta0 = theta0;
  out.lambda = instance.params.lambda;
  out.threshold = instance.params.threshold;
  out.sp_max = decision.best_value;
  out.sp_decision = decision.feasible;
  out.sp_witness = decision.witness;
  out.witness_independent = decision.witness && decision.witness->size() == k &&
                            g.is_independent(*decision.witness);
  out.is_decision = oracle.found;
  out.is_witness = oracle.witness;
  out.agree = out.sp_decision == out.is_decision;
  return out;
}

SuiteSummary random_equivalence_suite(std::uint64_t seed, std::size_t trials,
                                      std::size_t n_max,
                                      const std::vector<double>& theta0_choices,
                                      const SelectionOptions& options) {
  if (trials > 0 && n_max == 0) {
    throw Error(ErrorKind::kInvalidArgument, "n_max must be at least 1");
  }
  if (trials > 0 && theta0_choices.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "at least one theta0 is required");
  }

  SuiteSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  summary.n_max = n_max;
  summary.theta0_choices = theta0_choices;

  SuiteRng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = 1 + rng.below(n_max);
    const double p = kEdgeProbabilities[rng.below(std::size(kEdgeProbabilities))];

    TrialRecord record;
    record.index = trial;
    record.edge_probability = p;
    record.graph = random_graph(rng, n, p);

    for (std::size_t k = 1; k <= n; ++k) {
      std::optional<bool> first_decision;
      bool is_decision = false;
      for (double theta0 : theta0_choices) {
        const EquivalenceOutcome outcome = solve_is_via_sp(record.graph, k, theta0, options);
        ++summary.checks;
        is_decision = outcome.is_decision;
        bool ok = outcome.agree;
        if (outcome.sp_decision && !outcome.witness_independent) {
          ++summary.invalid_witnesses;
          ok = false;
        }
        if (!outcome.is_decision) {
          summary.min_gap = std::min(summary.min_gap.value_or(outcome.margin()), outcome.margin());
        }
        if (first_decision && *first_decision != outcome.sp_decision) {
          summary.theta0_independent = false;
        }
        first_decision = outcome.sp_decision;
        if (!ok) {
          record.agree = false;
          if (!summary.first_disagreement) summary.first_disagreement = Disagreement{trial, outcome};
        }
      }
      record.is_decisions.push_back(is_decision);
    }

    ++summary.trials_run;
    if (record.agree) ++summary.agreements;
    summary.records.push_back(std::move(record));
  }
  return summary;
}

}  // namespace spdiv
