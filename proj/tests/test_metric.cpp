#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spdiv/error.hpp"
#include "spdiv/metric.hpp"

using namespace spdiv;

namespace {

template <typename Fn>
Error capture(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected spdiv::Error");
  return Error(ErrorKind::kInvalidArgument, "unreachable");
}

}  // namespace

TEST_CASE("validate_metric accepts the encoded example graph") {
  const Matrix d{{0, 3, 6, 6}, {3, 0, 3, 6}, {6, 3, 0, 6}, {6, 6, 6, 0}};
  const FiniteMetric m = validate_metric(d);
  CHECK(m.size() == 4);
  CHECK(m(1, 2) == 3.0);
}

TEST_CASE("validate_metric accepts a singleton") {
  CHECK(validate_metric(Matrix{{0.0}}).size() == 1);
}

TEST_CASE("validate_metric names the violated axiom") {
  SUBCASE("triangle") {
    const Error e = capture([] { validate_metric(Matrix{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}); });
    CHECK(e.kind() == ErrorKind::kTriangleViolation);
    CHECK(e.indices() == std::vector<std::size_t>{0, 2, 1});
  }
  SUBCASE("asymmetric") {
    const Error e = capture([] { validate_metric(Matrix{{0, 1}, {2, 0}}); });
    CHECK(e.kind() == ErrorKind::kAsymmetricEntry);
    CHECK(e.indices() == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("diagonal") {
    const Error e = capture([] { validate_metric(Matrix{{0, 1}, {1, 0.5}}); });
    CHECK(e.kind() == ErrorKind::kNonzeroDiagonal);
    CHECK(e.indices() == std::vector<std::size_t>{1});
  }
  SUBCASE("negative") {
    const Error e = capture([] { validate_metric(Matrix{{0, -1}, {-1, 0}}); });
    CHECK(e.kind() == ErrorKind::kNegativeDistance);
  }
  SUBCASE("not square") {
    CHECK(capture([] { validate_metric(Matrix(2, 3)); }).kind() == ErrorKind::kNotSquare);
  }
  SUBCASE("non-finite") {
    const Error e = capture([] { validate_metric(Matrix{{0, NAN}, {NAN, 0}}); });
    CHECK(e.kind() == ErrorKind::kNonFinite);
  }
}

TEST_CASE("triangle tolerance absorbs rounding noise only") {
  CHECK_NOTHROW(validate_metric(Matrix{{0, 1, 2 + 5e-10}, {1, 0, 1}, {2 + 5e-10, 1, 0}}));
  CHECK_THROWS_AS(validate_metric(Matrix{{0, 1, 2 + 1e-8}, {1, 0, 1}, {2 + 1e-8, 1, 0}}), Error);
}

TEST_CASE("encode_graph on the four-vertex example") {
  const auto [metric, inst] = encode_graph(oracle::example_graph(), 3, 1.0);
  CHECK(inst.params.lambda == 3);
  CHECK(inst.params.q == doctest::Approx(std::exp(-3.0)).epsilon(1e-15));
  CHECK(inst.params.r == doctest::Approx(std::exp(-6.0)).epsilon(1e-15));
  CHECK(inst.params.q == doctest::Approx(0.049787).epsilon(1e-5));
  CHECK(inst.params.r == doctest::Approx(0.002479).epsilon(1e-3));
  CHECK(inst.params.threshold == doctest::Approx(2.985201).epsilon(1e-6));
  CHECK(metric(0, 1) == 3.0);
  CHECK(metric(1, 2) == 3.0);
  CHECK(metric(0, 2) == 6.0);
  CHECK(metric(2, 3) == 6.0);
}

TEST_CASE("encode_graph with k = 1") {
  const auto [metric, inst] = encode_graph(Graph(3, {{0, 1}}), 1, 1.0);
  CHECK(inst.params.lambda == 2);  // ceil(ln 4) = ceil(1.386)
  CHECK(inst.params.q == std::exp(-2.0));
  CHECK(inst.params.r == std::exp(-2.0) * std::exp(-2.0));
  CHECK(inst.params.threshold == 1.0);
}

TEST_CASE("encode_graph on an edgeless graph uses only 2*lambda") {
  const auto [metric, inst] = encode_graph(Graph(3, {}), 2, 1.0);
  CHECK(inst.params.lambda == 3);  // ceil(ln 8) = ceil(2.079)
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(metric(i, j) == (i == j ? 0.0 : 6.0));
}

TEST_CASE("encode_graph rejects bad k and theta") {
  CHECK(capture([] { encode_graph(Graph(3, {}), 0, 1.0); }).kind() == ErrorKind::kInvalidK);
  CHECK(capture([] { encode_graph(Graph(3, {}), 4, 1.0); }).kind() == ErrorKind::kInvalidK);
  CHECK(capture([] { encode_graph(Graph(3, {}), 2, 0.0); }).kind() == ErrorKind::kInvalidTheta);
  CHECK(capture([] { encode_graph(Graph(3, {}), 2, -1.0); }).kind() == ErrorKind::kInvalidTheta);
}

TEST_CASE("guarded ceiling snaps near-integers down") {
  CHECK(guarded_ceil(3.0) == 3);
  CHECK(guarded_ceil(3.0 + 1e-13) == 3);
  CHECK(guarded_ceil(3.0 - 1e-13) == 3);
  CHECK(guarded_ceil(3.0 + 1e-9) == 4);
  CHECK(guarded_ceil(2.48) == 3);
  // ln(4k)/theta0 exactly 2: theta0 = ln(4)/2 with k = 1
  CHECK(reduction_parameters(1, std::log(4.0) / 2.0).lambda == 2);
}

TEST_CASE("encoding invariants over random graphs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  const double thetas[] = {0.1, 0.5, 1.0, 2.0, 3.0, 7.5};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = size(rng);
    std::vector<Graph::Edge> edges;
    const double p = prob(rng);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (prob(rng) < p) edges.emplace_back(u, v);
    const Graph g(n, edges);
    const std::size_t k = 1 + rng() % n;
    const double theta0 = thetas[rng() % std::size(thetas)];

    const auto [metric, inst] = encode_graph(g, k, theta0);
    const auto& par = inst.params;
    const double kd = static_cast<double>(k);
    CHECK(par.q <= 1.0 / (4.0 * kd));
    CHECK(par.r <= 1.0 / (16.0 * kd * kd));
    CHECK(par.r == par.q * par.q);
    CHECK(par.threshold == kd / (1.0 + (kd - 1.0) * par.r));
    const double lambda = static_cast<double>(par.lambda);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double d = metric(i, j);
        CHECK((d == 0.0 || d == lambda || d == 2.0 * lambda));
        CHECK((d == 0.0) == (i == j));
      }
    // exact triangle inequality
    CHECK_NOTHROW(validate_metric(metric.distances(), 0.0));
  }
}

TEST_CASE("parse_graph") {
  SUBCASE("example") {
    const Graph g = parse_graph("4 2\n0 1\n1 2\n");
    CHECK(g == oracle::example_graph());
  }
  SUBCASE("empty edge set") {
    const Graph g = parse_graph("1 0\n");
    CHECK(g.size() == 1);
    CHECK(g.edges().empty());
  }
  SUBCASE("comments, blank lines, duplicates") {
    const Graph g = parse_graph("# header comment\n4 3  # n m\n\n1 0\n0 1\n2\t3\n");
    CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {2, 3}});
  }
  SUBCASE("self loop") {
    const Error e = capture([] { parse_graph("2 1\n0 0\n"); });
    CHECK(e.kind() == ErrorKind::kSelfLoop);
    CHECK(e.indices() == std::vector<std::size_t>{2});
  }
  SUBCASE("out of range") {
    const Error e = capture([] { parse_graph("2 1\n\n0 2\n"); });
    CHECK(e.kind() == ErrorKind::kVertexOutOfRange);
    CHECK(e.indices() == std::vector<std::size_t>{3});
  }
  SUBCASE("malformed") {
    CHECK(capture([] { parse_graph("2 1\n0 x\n"); }).indices() == std::vector<std::size_t>{2});
    CHECK(capture([] { parse_graph("2 1\n0 1 1\n"); }).kind() == ErrorKind::kParseError);
    CHECK(capture([] { parse_graph("2 1\n-1 1\n"); }).kind() == ErrorKind::kParseError);
    CHECK(capture([] { parse_graph(""); }).kind() == ErrorKind::kParseError);
    CHECK(capture([] { parse_graph("3 2\n0 1\n"); }).kind() == ErrorKind::kParseError);
    CHECK(capture([] { parse_graph("3 1\n0 1\n1 2\n"); }).indices() ==
          std::vector<std::size_t>{3});
  }
}

TEST_CASE("serialize_graph round-trips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<Graph::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(v, u);
    const Graph g(n, edges);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("metric CSV") {
  const Matrix d = parse_metric_csv("0, 3,6\n3,0,3\r\n6,3,0\n\n");
  CHECK(d == Matrix{{0, 3, 6}, {3, 0, 3}, {6, 3, 0}});
  CHECK(parse_metric_csv(serialize_metric_csv(Matrix{{0, 0.1}, {0.1, 0}})) ==
        Matrix{{0, 0.1}, {0.1, 0}});
  CHECK(capture([] { parse_metric_csv("0,1\n1,zero\n"); }).indices() ==
        std::vector<std::size_t>{2});
  CHECK(capture([] { parse_metric_csv("0,1\n1\n"); }).kind() == ErrorKind::kParseError);
}

TEST_CASE("scaled metric") {
  const FiniteMetric m = validate_metric(Matrix{{0, 1}, {1, 0}});
  CHECK(m.scaled(2.5)(0, 1) == 2.5);
  CHECK_THROWS_AS(m.scaled(0.0), Error);
}
