#include "spdiv/sp_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spdiv/error.hpp"

namespace spdiv {

SimilarityMatrix similarity_matrix(const FiniteMetric& metric, const Subset& subset,
                                   double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw Error(ErrorKind::kInvalidTheta, "InvalidTheta: theta must be positive and finite");
  }
  const std::size_t n = metric.size();
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const std::size_t x = subset[i];
    if (x >= n) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "IndexOutOfRange: " + std::to_string(x) + " >= " + std::to_string(n), {x});
    }
    if (seen[x]) {
      throw Error(ErrorKind::kDuplicateIndex, "DuplicateIndex: " + std::to_string(x), {x});
    }
    seen[x] = true;
  }

  const std::size_t m = subset.size();
  SimilarityMatrix out{Matrix(m, m), theta, subset};
  for (std::size_t i = 0; i < m; ++i) {
    out.z(i, i) = 1.0;
    for (std::size_t j = i + 1; j < m; ++j) {
      const double s = std::exp(-theta * metric(subset[i], subset[j]));
      out.z(i, j) = s;
      out.z(j, i) = s;
    }
  }
  return out;
}

WeightVector solve_weighting(const Matrix& z) {
  const std::vector<double> ones(z.rows(), 1.0);
  const LuFactorization lu = lu_factor(z, kPivotTolerance);

  WeightVector out;
  out.w = lu.solve(ones);
  std::vector<double> residual = z * std::span<const double>(out.w);
  for (double& v : residual) v -= 1.0;
  out.residual_inf = norm_inf(residual);
  if (!(out.residual_inf <= kSolveTolerance)) {
    throw Error(ErrorKind::kSingularSimilarity,
                "SingularSimilarity: residual " + std::to_string(out.residual_inf) +
                    " exceeds tolerance");
  }
  out.sp_value = std::accumulate(out.w.begin(), out.w.end(), 0.0);
  return out;
}

WeightVector sp_value(const FiniteMetric& metric, const Subset& subset, double theta) {
  if (subset.empty()) throw Error(ErrorKind::kEmptySubset, "EmptySubset: subset is empty");
  return solve_weighting(similarity_matrix(metric, subset, theta).z);
}

double sp_uniform(std::size_t k, double s) {
  if (k == 0) throw Error(ErrorKind::kInvalidK, "InvalidK: k must be at least 1");
  if (!(s >= 0.0 && s < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "similarity must lie in [0, 1)");
  }
  const double kd = static_cast<double>(k);
  return kd / (1.0 + (kd - 1.0) * s);
}

DominanceCertificate dominance_certificate(const Matrix& z) {
  DominanceCertificate c;
  for (std::size_t i = 0; i < z.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < z.cols(); ++j)
      if (j != i) sum += std::abs(z(i, j));
    c.b_norm_inf = std::max(c.b_norm_inf, sum);
  }
  c.dominant = c.b_norm_inf < 1.0;
  return c;
}

double sp_bad_closed_form(double q, double r) {
  const double denominator = 1.0 + q - 2.0 * r * r;
  if (!(std::abs(denominator) >= kPivotTolerance)) {
    throw Error(ErrorKind::kDegenerateDenominator,
                "DegenerateDenominator: 1 + q - 2r^2 is numerically zero");
  }
  return (3.0 + q - 4.0 * r) / denominator;
}

}  // namespace spdiv
