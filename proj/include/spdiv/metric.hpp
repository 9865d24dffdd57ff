#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spdiv/matrix.hpp"

namespace spdiv {

inline constexpr double kMetricTolerance = 1e-9;
inline constexpr double kLambdaIntegerGuard = 1e-12;

// Validated finite metric space on points 0..n-1. Only constructible through
// validate_metric / encode_graph, so every instance satisfies the metric axioms.
class FiniteMetric {
 public:
  std::size_t size() const noexcept { return d_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return d_(i, j); }
  const Matrix& distances() const noexcept { return d_; }

  // Multiplies every distance by factor > 0; the result is again a metric.
  FiniteMetric scaled(double factor) const;

 private:
  explicit FiniteMetric(Matrix d) : d_(std::move(d)) {}
  friend FiniteMetric validate_metric(const Matrix& d, double tolerance);

  Matrix d_;
};

// Checks, in order: squareness, finiteness, zero diagonal, nonnegativity,
// symmetry, triangle inequality. The error names the first violated axiom:
// NonzeroDiagonal(i), NegativeDistance(i,j), AsymmetricEntry(i,j),
// TriangleViolation(i,j,k) meaning d(i,j) > d(i,k) + d(k,j) + tolerance.
FiniteMetric validate_metric(const Matrix& d, double tolerance = kMetricTolerance);

// Undirected simple graph; edges are stored as sorted pairs (u < v) in
// lexicographic order.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  // Throws kSelfLoop / kVertexOutOfRange; duplicates are dropped.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  bool is_independent(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
};

// Edge-list text format: "n m" header, then m lines "u v" (0-indexed).
// '#' starts a comment; blank lines are skipped. Line numbers in errors are
// 1-based physical lines of the input.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// CSV, one row per line, no header.
Matrix parse_metric_csv(std::string_view text);
std::string serialize_metric_csv(const Matrix& d);

// Parameters of the Independent Set encoding for a given (k, theta0):
// lambda = ceil(ln(4k)/theta0), q = exp(-theta0*lambda), r = q^2,
// threshold = k / (1 + (k-1) r).
struct ReductionParameters {
  std::size_t k = 0;
  double theta0 = 0.0;
  long lambda = 0;
  double q = 0.0;
  double r = 0.0;
  double threshold = 0.0;
};

// Throws kInvalidK for k == 0 and kInvalidTheta for theta0 <= 0 (or NaN).
ReductionParameters reduction_parameters(std::size_t k, double theta0);

// ceil(x) except that x within kLambdaIntegerGuard of an integer m maps to m.
long guarded_ceil(double x);

struct ReductionInstance {
  Graph graph;
  ReductionParameters params;
};

// Distance 0 on the diagonal, lambda on edges, 2*lambda on non-edges.
std::pair<FiniteMetric, ReductionInstance> encode_graph(const Graph& g, std::size_t k,
                                                       double theta0);

}  // namespace spdiv
