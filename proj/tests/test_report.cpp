#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spdiv/report.hpp"

using namespace spdiv;

TEST_CASE("format_double") {
  CHECK(format_double(3.0) == "3.0");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-2.5e-20) == "-2.4999999999999999e-20");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "null");
  CHECK(format_double(std::nan("")) == "null");

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("canonical JSON round-trips byte for byte") {
  const FiniteMetric m = encode_graph(oracle::example_graph(), 3, 1.0).first;
  const std::vector<Json> reports{
      to_json(sp_value(m, {0, 1, 3}, 1.0)),
      to_json(exact_select(m, 3, 1.0)),
      to_json(decide(m, 3, 1.0, 2.99)),
      to_json(deformation_scan(m, {0, 1, 3}, {0, 1}, 1.0, 3.0, {5})),
      to_json(solve_is_via_sp(oracle::example_graph(), 3, 1.0)),
      to_json(reduction_parameters(3, 1.0)),
      to_json(random_equivalence_suite(1, 3, 5, {1.0})),
  };
  for (const Json& j : reports) {
    const std::string once = dump_canonical(j);
    const std::string twice = dump_canonical(Json::parse(once));
    CHECK(once == twice);
    CHECK(once.find('\n') == std::string::npos);
  }
}

TEST_CASE("canonical JSON keeps insertion order") {
  const Json j{{"z", 1}, {"a", 2.0}, {"m", {{"y", true}, {"b", nullptr}}}};
  CHECK(dump_canonical(j) == R"({"z":1,"a":2.0,"m":{"y":true,"b":null}})");
}

TEST_CASE("suite summary survives serialization") {
  const SuiteSummary s = random_equivalence_suite(3, 6, 6, {0.5, 3.0});
  const SuiteSummary back = suite_summary_from_json(Json::parse(dump_canonical(to_json(s))));
  CHECK(back.trials_run == s.trials_run);
  CHECK(back.checks == s.checks);
  CHECK(back.min_gap == s.min_gap);
  REQUIRE(back.records.size() == s.records.size());
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    CHECK(back.records[i].graph == s.records[i].graph);
    CHECK(back.records[i].is_decisions == s.records[i].is_decisions);
  }
}
