#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "spdiv/metric.hpp"
#include "spdiv/selection.hpp"

namespace spdiv {

// Random source for reproducible suites. The engine is std::mt19937_64,
// whose output sequence is fixed by the C++ standard; the derived values use
// only the raw 64-bit words so they do not depend on the standard library's
// distribution implementations:
//   uniform01()  = (word >> 11) * 2^-53
//   below(m)     = rejection sampling on word % m
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01();
  std::size_t below(std::size_t m);

 private:
  std::mt19937_64 engine_;
};

// G(n, p): each pair u < v, in lexicographic order, is an edge iff
// uniform01() < p.
Graph random_graph(SuiteRng& rng, std::size_t n, double edge_probability);

struct IndependentSetResult {
  bool found = false;
  std::optional<Subset> witness;  // lexicographically smallest
};

// Exhaustive search over size-k vertex subsets. Throws kInvalidK, kInstanceTooLarge.
IndependentSetResult brute_force_is(const Graph& g, std::size_t k,
                                    const SelectionOptions& options = {});

struct EquivalenceOutcome {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::size_t k = 0;
  double theta0 = 0.0;
  long lambda = 0;
  double threshold = 0.0;
  double sp_max = 0.0;
  bool sp_decision = false;
  std::optional<Subset> sp_witness;
  bool witness_independent = false;  // re-checked against the edge set
  bool is_decision = false;
  std::optional<Subset> is_witness;
  bool agree = false;

  // threshold - sp_max; positive on no-instances
  double margin() const { return threshold - sp_max; }
};

EquivalenceOutcome solve_is_via_sp(const Graph& g, std::size_t k, double theta0,
                                   const SelectionOptions& options = {});

struct TrialRecord {
  std::size_t index = 0;
  double edge_probability = 0.0;
  Graph graph;
  // is_decisions[k-1] for k = 1..n
  std::vector<bool> is_decisions;
  bool agree = true;
};

struct Disagreement {
  std::size_t trial = 0;
  EquivalenceOutcome outcome;
};

struct SuiteSummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t n_max = 0;
  std::vector<double> theta0_choices;
  std::size_t trials_run = 0;
  std::size_t agreements = 0;
  std::size_t checks = 0;           // (graph, k, theta0) triples
  std::size_t invalid_witnesses = 0;
  bool theta0_independent = true;   // sp_decision constant across theta0
  std::optional<double> min_gap;    // min margin over no-instances
  std::optional<Disagreement> first_disagreement;
  std::vector<TrialRecord> records;
};

inline constexpr double kEdgeProbabilities[] = {0.2, 0.5, 0.8};

// For each trial: n uniform in [1, n_max], edge probability drawn from
// {0.2, 0.5, 0.8}, then every k in 1..n is checked under every theta0.
// A trial agrees when all of its checks agree.
SuiteSummary random_equivalence_suite(std::uint64_t seed, std::size_t trials,
                                      std::size_t n_max,
                                      const std::vector<double>& theta0_choices,
                                      const SelectionOptions& options = {});

}  // namespace spdiv
