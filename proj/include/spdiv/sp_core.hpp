#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spdiv/matrix.hpp"
#include "spdiv/metric.hpp"

namespace spdiv {

inline constexpr double kSolveTolerance = 1e-9;   // ||Zw - 1||_inf
inline constexpr double kPivotTolerance = 1e-12;  // |pivot| below this is singular

using Subset = std::vector<std::size_t>;

// Z_ij = exp(-theta * d(subset[i], subset[j])).
struct SimilarityMatrix {
  Matrix z;
  double theta = 0.0;
  Subset subset;

  std::size_t size() const noexcept { return z.rows(); }
};

// Solution of Z w = 1. sp_value is the plain sum of w.
struct WeightVector {
  std::vector<double> w;
  double residual_inf = 0.0;
  double sp_value = 0.0;
};

// Z = I + B; b_norm_inf is the largest off-diagonal absolute row sum.
struct DominanceCertificate {
  double b_norm_inf = 0.0;
  bool dominant = true;
};

// Throws kDuplicateIndex, kIndexOutOfRange, kInvalidTheta.
SimilarityMatrix similarity_matrix(const FiniteMetric& metric, const Subset& subset,
                                   double theta);

// Solves z w = 1 for an arbitrary square matrix. Throws kSingularSimilarity
// when a pivot is below kPivotTolerance or the residual exceeds kSolveTolerance.
WeightVector solve_weighting(const Matrix& z);

// Throws kEmptySubset plus everything similarity_matrix / solve_weighting throw.
WeightVector sp_value(const FiniteMetric& metric, const Subset& subset, double theta);

// k / (1 + (k-1) s): SP of k points with all off-diagonal similarities s.
double sp_uniform(std::size_t k, double s);

DominanceCertificate dominance_certificate(const Matrix& z);
inline DominanceCertificate dominance_certificate(const SimilarityMatrix& z) {
  return dominance_certificate(z.z);
}

// SP of the three-point similarity pattern [[1,q,r],[q,1,r],[r,r,1]]:
// (3 + q - 4r) / (1 + q - 2r^2).
double sp_bad_closed_form(double q, double r);

}  // namespace spdiv
