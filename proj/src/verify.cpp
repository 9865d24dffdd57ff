#include "spdiv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spdiv/error.hpp"

namespace spdiv {
namespace {

bool near(double a, double b, double scale) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, scale);
}

std::size_t position_in(const Subset& subset, std::size_t x) {
  const auto it = std::find(subset.begin(), subset.end(), x);
  if (it == subset.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "pair endpoint " + std::to_string(x) + " is not in the subset", {x});
  }
  return static_cast<std::size_t>(it - subset.begin());
}

// Every off-diagonal subset distance must be lambda or 2 lambda.
void require_two_distance(const FiniteMetric& metric, const Subset& subset, double lambda) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      const double d = metric(subset[i], subset[j]);
      if (!near(d, lambda, lambda) && !near(d, 2.0 * lambda, lambda)) {
        throw Error(ErrorKind::kNotReductionStructure,
                    "NotReductionStructure: d(" + std::to_string(subset[i]) + "," +
                        std::to_string(subset[j]) + ") = " + std::to_string(d) +
                        " is neither lambda nor 2*lambda",
                    {subset[i], subset[j]});
      }
    }
  }
}

void check_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidArgument, std::string(name) + " must be positive and finite");
  }
}

}  // namespace

DeformationReport deformation_scan(const FiniteMetric& metric, const Subset& subset,
                                   std::pair<std::size_t, std::size_t> pair, double theta0,
                                   double lambda, const ScanOptions& options) {
  check_positive(theta0, "theta0");
  check_positive(lambda, "lambda");
  check_positive(options.step, "finite-difference step");
  if (options.num_samples == 0) {
    throw Error(ErrorKind::kInvalidArgument, "num_samples must be at least 1");
  }
  if (pair.first == pair.second) {
    throw Error(ErrorKind::kInvalidArgument, "pair endpoints must differ");
  }

  const SimilarityMatrix base = similarity_matrix(metric, subset, theta0);
  const std::size_t pa = position_in(subset, pair.first);
  const std::size_t pb = position_in(subset, pair.second);
  require_two_distance(metric, subset, lambda);

  auto deformed = [&](double t) {
    Matrix z = base.z;
    z(pa, pb) = z(pb, pa) = std::exp(-theta0 * t);
    return z;
  };
  auto objective = [&](double t) { return solve_weighting(deformed(t)).sp_value; };

  DeformationReport report;
  report.pair = pair;
  report.subset = subset;
  report.theta0 = theta0;
  report.lambda = lambda;
  report.step = options.step;
  report.min_weight_overall = std::numeric_limits<double>::infinity();

  const std::size_t count = options.num_samples;
  for (std::size_t i = 0; i < count; ++i) {
    double t = 2.0 * lambda;
    if (count > 1 && i + 1 < count) {
      t = lambda + lambda * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    const Matrix z = deformed(t);
    const DominanceCertificate cert = dominance_certificate(z);
    if (!cert.dominant) {
      throw Error(ErrorKind::kDominanceViolated,
                  "DominanceViolated(t=" + std::to_string(t) + "): ||B||_inf = " +
                      std::to_string(cert.b_norm_inf),
                  {i});
    }
    const WeightVector w = solve_weighting(z);

    DeformationSample s;
    s.t = t;
    s.value = w.sp_value;
    s.derivative_formula = 2.0 * theta0 * std::exp(-theta0 * t) * w.w[pa] * w.w[pb];
    s.derivative_fd = (objective(t + options.step) - objective(t - options.step)) /
                      (2.0 * options.step);
    s.min_weight = *std::min_element(w.w.begin(), w.w.end());
    s.b_norm_inf = cert.b_norm_inf;
    report.min_weight_overall = std::min(report.min_weight_overall, s.min_weight);
    report.samples.push_back(s);
  }

  report.strictly_increasing = true;
  for (std::size_t i = 1; i < report.samples.size(); ++i) {
    if (!(report.samples[i].value > report.samples[i - 1].value)) {
      report.strictly_increasing = false;
    }
  }
  return report;
}

bool derivative_identity_check(const DeformationReport& report, double tol) {
  const auto& samples = report.samples;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const double formula = samples[i].derivative_formula;
    if (!(std::abs(formula - samples[i].derivative_fd) <= tol * std::max(1.0, std::abs(formula)))) {
      return false;
    }
  }
  return true;
}

std::vector<NeumannTerm> neumann_partial_sums(const Matrix& z, std::size_t max_order) {
  const DominanceCertificate cert = dominance_certificate(z);
  if (!cert.dominant) {
    throw Error(ErrorKind::kNotDominant,
                "NotDominant: ||B||_inf = " + std::to_string(cert.b_norm_inf) + " >= 1");
  }
  const std::size_t n = z.rows();
  const Matrix identity = Matrix::identity(n);
  const Matrix neg_b = identity - z;

  std::vector<NeumannTerm> terms;
  Matrix partial = identity;  // S_m
  Matrix power = identity;    // (-B)^m
  for (std::size_t m = 0; m <= max_order; ++m) {
    NeumannTerm term;
    term.order = m;
    term.deviation = norm_inf(z * partial - identity);
    power = neg_b * power;
    term.power_norm = norm_inf(power);
    term.bound = std::pow(cert.b_norm_inf, static_cast<double>(m + 1));
    terms.push_back(term);
    partial = partial + power;
  }
  return terms;
}

PositivityResult positivity_bound_check(const FiniteMetric& metric, const Subset& subset,
                                        double theta0, double lambda, std::size_t num_samples) {
  check_positive(lambda, "lambda");
  require_two_distance(metric, subset, lambda);

  PositivityResult result;
  result.min_weight = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (!near(metric(subset[i], subset[j]), lambda, lambda)) continue;
      const DeformationReport report = deformation_scan(
          metric, subset, {subset[i], subset[j]}, theta0, lambda, {num_samples});
      result.min_weight = std::min(result.min_weight, report.min_weight_overall);
      ++result.deformations;
    }
  }
  if (result.deformations == 0) {
    const WeightVector w = sp_value(metric, subset, theta0);
    result.min_weight = *std::min_element(w.w.begin(), w.w.end());
  }
  result.passes = result.min_weight > kPositivityBound;
  return result;
}

bool invertibility_criterion(const Matrix& b) {
  if (!b.square()) throw Error(ErrorKind::kNotSquare, "B must be square");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0.0) {
      throw Error(ErrorKind::kNonzeroDiagonal,
                  "NonzeroDiagonal(" + std::to_string(i) + "): b_ii must be 0", {i});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += std::abs(b(i, j));
    if (!(sum < 1.0)) return false;
  }
  if (n == 0) return true;

  const Matrix m = Matrix::identity(n) + b;
  std::vector<double> e1(n, 0.0);
  e1[0] = 1.0;
  const std::vector<double> x = lu_factor(m, kPivotTolerance).solve(e1);
  std::vector<double> residual = m * std::span<const double>(x);
  residual[0] -= 1.0;
  if (!(norm_inf(residual) <= kSolveTolerance)) {
    throw Error(ErrorKind::kSingularSimilarity,
                "dominant I+B failed to solve (residual " + std::to_string(norm_inf(residual)) +
                    ")");
  }
  return true;
}

}  // namespace spdiv
