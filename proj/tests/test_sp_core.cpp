#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spdiv/error.hpp"
#include "spdiv/sp_core.hpp"

using namespace spdiv;

namespace {

FiniteMetric example_metric() { return encode_graph(oracle::example_graph(), 3, 1.0).first; }

FiniteMetric uniform_metric(std::size_t n, double distance) {
  Matrix d(n, n, distance);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 0.0;
  return validate_metric(d);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected spdiv::Error");
  return ErrorKind::kInvalidArgument;
}

const double q = std::exp(-3.0);
const double r = std::exp(-6.0);

}  // namespace

TEST_CASE("similarity matrix of the independent subset") {
  const SimilarityMatrix z = similarity_matrix(example_metric(), {0, 2, 3}, 1.0);
  REQUIRE(z.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(z.z(i, j) == (i == j ? 1.0 : std::exp(-6.0)));
}

TEST_CASE("similarity matrix of the subset containing an edge") {
  const SimilarityMatrix z = similarity_matrix(example_metric(), {0, 1, 3}, 1.0);
  const Matrix expected{{1, q, r}, {q, 1, r}, {r, r, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(z.z(i, j) == doctest::Approx(expected(i, j)));
}

TEST_CASE("similarity matrix argument errors") {
  const FiniteMetric m = example_metric();
  CHECK(similarity_matrix(m, {2}, 1.0).z == Matrix{{1.0}});
  CHECK(kind_of([&] { similarity_matrix(m, {0, 0}, 1.0); }) == ErrorKind::kDuplicateIndex);
  CHECK(kind_of([&] { similarity_matrix(m, {0, 4}, 1.0); }) == ErrorKind::kIndexOutOfRange);
  CHECK(kind_of([&] { similarity_matrix(m, {0}, 0.0); }) == ErrorKind::kInvalidTheta);
}

TEST_CASE("sp_value on the reference subsets") {
  const FiniteMetric m = example_metric();
  const WeightVector ind = sp_value(m, {0, 2, 3}, 1.0);
  CHECK(std::abs(ind.sp_value - 2.985201) <= 1e-5);
  CHECK(ind.residual_inf <= kSolveTolerance);

  const WeightVector bad = sp_value(m, {0, 1, 3}, 1.0);
  CHECK(std::abs(bad.sp_value - 2.895737) <= 1e-5);

  // weights of the symmetric system are all 1/(1+2r)
  for (double wi : ind.w) CHECK(wi == doctest::Approx(1.0 / (1.0 + 2.0 * r)).epsilon(1e-14));
}

TEST_CASE("sp_value of a singleton is exactly one") {
  const FiniteMetric m = example_metric();
  for (std::size_t i = 0; i < 4; ++i) CHECK(sp_value(m, {i}, 1.0).sp_value == 1.0);
}

TEST_CASE("duplicate points make the similarity singular") {
  const FiniteMetric twins = validate_metric(Matrix{{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
  CHECK(kind_of([&] { sp_value(twins, {0, 1}, 1.0); }) == ErrorKind::kSingularSimilarity);
  CHECK(kind_of([&] { sp_value(twins, {0, 1, 2}, 1.0); }) == ErrorKind::kSingularSimilarity);
  CHECK_NOTHROW(sp_value(twins, {0, 2}, 1.0));
  CHECK(kind_of([&] { sp_value(twins, {}, 1.0); }) == ErrorKind::kEmptySubset);
}

TEST_CASE("sp_uniform closed form") {
  CHECK(sp_uniform(3, r) == doctest::Approx(2.985201).epsilon(1e-6));
  CHECK(sp_uniform(1, 0.7) == 1.0);
  CHECK(sp_uniform(4, 0.0) == 4.0);

  // 2x2 by hand: [[1,s],[s,1]] w = 1 gives w1 = w2 = (1-s)/(1-s^2) = 1/(1+s)
  const double s = std::exp(-3.0);
  const double det = 1.0 - s * s;
  const double by_hand = 2.0 * (1.0 - s) / det;
  CHECK(sp_uniform(2, s) == doctest::Approx(by_hand).epsilon(1e-15));
  CHECK(sp_uniform(2, s) == doctest::Approx(1.905148).epsilon(1e-6));
  CHECK(sp_value(uniform_metric(2, 3.0), {0, 1}, 1.0).sp_value ==
        doctest::Approx(by_hand).epsilon(1e-14));

  CHECK(kind_of([] { sp_uniform(0, 0.1); }) == ErrorKind::kInvalidK);
  CHECK(kind_of([] { sp_uniform(2, 1.0); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { sp_uniform(2, -0.1); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("closed form agrees with the solver on uniform subsets") {
  for (std::size_t k = 1; k <= 12; ++k) {
    for (double dist : {0.5, 1.0, 3.0, 6.0, 20.0}) {
      const double s = std::exp(-dist);
      const double solved = sp_value(uniform_metric(k, dist), [&] {
                              Subset all(k);
                              for (std::size_t i = 0; i < k; ++i) all[i] = i;
                              return all;
                            }(), 1.0).sp_value;
      CHECK(std::abs(solved - sp_uniform(k, s)) <= 1e-9);
    }
  }
}

TEST_CASE("dominance certificate") {
  const DominanceCertificate bad = dominance_certificate(
      similarity_matrix(example_metric(), {0, 1, 3}, 1.0));
  CHECK(bad.b_norm_inf == doctest::Approx(q + r).epsilon(1e-15));
  CHECK(bad.b_norm_inf == doctest::Approx(0.052266).epsilon(1e-5));
  CHECK(bad.dominant);

  const DominanceCertificate one = dominance_certificate(Matrix{{1.0}});
  CHECK(one.b_norm_inf == 0.0);
  CHECK(one.dominant);

  const DominanceCertificate twins = dominance_certificate(Matrix{{1, 1}, {1, 1}});
  CHECK(twins.b_norm_inf == 1.0);
  CHECK_FALSE(twins.dominant);
}

TEST_CASE("three-point closed form") {
  CHECK(sp_bad_closed_form(q, r) == doctest::Approx(2.895737).epsilon(1e-6));
  // q = r collapses to the uniform pattern 3/(1+2r)
  CHECK(sp_bad_closed_form(r, r) == doctest::Approx(3.0 / (1.0 + 2.0 * r)).epsilon(1e-15));
  CHECK(sp_bad_closed_form(r, r) == doctest::Approx(2.985201).epsilon(1e-6));
  CHECK(sp_bad_closed_form(0.0, 0.0) == 3.0);
  // 1 + q - 2r^2 = 0 at q = 1, r = 1
  CHECK(kind_of([] { sp_bad_closed_form(1.0, 1.0); }) == ErrorKind::kDegenerateDenominator);

  const double solved = sp_value(example_metric(), {0, 1, 3}, 1.0).sp_value;
  CHECK(std::abs(solved - sp_bad_closed_form(q, r)) <= 1e-9);
}

TEST_CASE("solver agrees with Cramer's rule on random metrics") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const FiniteMetric m = oracle::random_euclidean(rng, n);
    const double theta = 0.5 + static_cast<double>(rng() % 40) / 10.0;
    Subset all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    WeightVector w;
    try {
      w = sp_value(m, all, theta);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kSingularSimilarity);
      continue;
    }
    CHECK(w.residual_inf <= kSolveTolerance);
    double sum = 0.0;
    for (double wi : w.w) sum += wi;
    CHECK(w.sp_value == sum);
    const double reference = oracle::sp_by_cramer(oracle::similarity(m, all, theta));
    CHECK(w.sp_value == doctest::Approx(reference).epsilon(1e-8));
  }
}

TEST_CASE("rescaling and permutation invariance") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> theta_dist(0.5, 5.0);
  std::uniform_real_distribution<double> factor(0.1, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const FiniteMetric m = oracle::random_euclidean(rng, n);
    Subset subset(n);
    for (std::size_t i = 0; i < n; ++i) subset[i] = i;
    std::shuffle(subset.begin(), subset.end(), rng);
    subset.resize(1 + rng() % n);
    const double theta = theta_dist(rng);
    const double c = factor(rng);
    const double base = sp_value(m, subset, theta).sp_value;
    CHECK(std::abs(base - sp_value(m.scaled(c), subset, theta / c).sp_value) <= 1e-9);

    Subset shuffled = subset;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(std::abs(base - sp_value(m, shuffled, theta).sp_value) <= 1e-12);
  }
}

TEST_CASE("dominance bound on reduction subsets") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<Graph::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    const std::size_t k = 1 + rng() % n;
    const double theta0 = std::array{0.5, 1.0, 3.0}[rng() % 3];
    const auto [metric, inst] = encode_graph(Graph(n, edges), k, theta0);
    Subset all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    const DominanceCertificate c = dominance_certificate(similarity_matrix(metric, all, theta0));
    // summation order may differ from the product by an ulp
    CHECK(c.b_norm_inf <= static_cast<double>(k - 1) * inst.params.q * (1.0 + 1e-12));
    CHECK(c.b_norm_inf < 0.25);
  }
}
