#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spdiv/matrix.hpp"
#include "spdiv/metric.hpp"
#include "spdiv/sp_core.hpp"

namespace spdiv {

inline constexpr double kFiniteDifferenceStep = 1e-5;
inline constexpr double kDerivativeTolerance = 1e-5;
inline constexpr std::size_t kDefaultScanSamples = 33;
inline constexpr double kPositivityBound = 2.0 / 3.0;

// One grid point of a deformation scan.
struct DeformationSample {
  double t = 0.0;
  double value = 0.0;                // F(t) = 1^T Z(t)^{-1} 1
  double derivative_formula = 0.0;   // 2 theta0 exp(-theta0 t) w_a(t) w_b(t)
  double derivative_fd = 0.0;        // central difference of F
  double min_weight = 0.0;           // min_i w_i(t)
  double b_norm_inf = 0.0;           // dominance certificate of Z(t)
};

struct DeformationReport {
  std::pair<std::size_t, std::size_t> pair;  // ground-set indices
  Subset subset;
  double theta0 = 0.0;
  double lambda = 0.0;
  double step = kFiniteDifferenceStep;
  std::vector<DeformationSample> samples;
  bool strictly_increasing = false;
  double min_weight_overall = 0.0;
};

struct ScanOptions {
  std::size_t num_samples = kDefaultScanSamples;
  double step = kFiniteDifferenceStep;
};

// Replaces d(a, b) inside the subset by t and tracks F(t) on a uniform grid
// over [lambda, 2 lambda] (endpoints included). With a single sample the grid
// is {2 lambda}. The pair is given as ground-set indices that must both lie in
// the subset; every other subset distance must be lambda or 2 lambda.
// Throws kNotReductionStructure, kDominanceViolated(sample index), and solver
// errors.
DeformationReport deformation_scan(const FiniteMetric& metric, const Subset& subset,
                                   std::pair<std::size_t, std::size_t> pair, double theta0,
                                   double lambda, const ScanOptions& options = {});

// |formula - fd| <= tol * max(1, |formula|) at every interior sample.
bool derivative_identity_check(const DeformationReport& report,
                               double tol = kDerivativeTolerance);

struct NeumannTerm {
  std::size_t order = 0;
  double deviation = 0.0;   // ||(I+B) S_m - I||_inf
  double power_norm = 0.0;  // ||(-B)^{m+1}||_inf computed directly
  double bound = 0.0;       // b_norm_inf^{m+1}
};

// Partial sums S_m = sum_{i<=m} (-B)^i for m = 0..max_order with Z = I + B.
// Throws kNotDominant.
std::vector<NeumannTerm> neumann_partial_sums(const Matrix& z, std::size_t max_order);
inline std::vector<NeumannTerm> neumann_partial_sums(const SimilarityMatrix& z,
                                                     std::size_t max_order) {
  return neumann_partial_sums(z.z, max_order);
}

struct PositivityResult {
  double min_weight = 0.0;
  bool passes = false;
  std::size_t deformations = 0;  // number of lambda-pairs scanned
};

// Scans every pair of the subset at distance lambda and takes the minimum
// weight over all samples; a subset without such pairs is evaluated once.
// passes <=> min_weight > 2/3.
PositivityResult positivity_bound_check(const FiniteMetric& metric, const Subset& subset,
                                        double theta0, double lambda,
                                        std::size_t num_samples = kDefaultScanSamples);

// true iff every absolute off-diagonal row sum of b is < 1. When true, also
// solves (I+B) x = e_1 and throws kSingularSimilarity if that fails.
// Throws kNonzeroDiagonal.
bool invertibility_criterion(const Matrix& b);

}  // namespace spdiv
