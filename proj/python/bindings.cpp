#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spdiv/error.hpp"
#include "spdiv/metric.hpp"
#include "spdiv/reduction.hpp"
#include "spdiv/report.hpp"
#include "spdiv/selection.hpp"
#include "spdiv/sp_core.hpp"
#include "spdiv/verify.hpp"

namespace py = pybind11;
using namespace spdiv;

namespace {

using Rows = std::vector<std::vector<double>>;
using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

// Reports cross the boundary as canonical JSON; the Python side parses them.
template <typename T>
std::string dump(const T& value) {
  return dump_canonical(to_json(value));
}

FiniteMetric metric_of(const Rows& rows) { return validate_metric(Matrix::from_rows(rows)); }

SelectionOptions options_of(std::uint64_t cap) {
  SelectionOptions o;
  o.enumeration_cap = cap;
  return o;
}

}  // namespace

PYBIND11_MODULE(_spdiv, m) {
  m.doc() = "Solow-Polasky diversity core";

  static py::exception<Error> error(m, "SpdivError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(e.what(), to_string(e.kind()), e.indices())
                                       .ptr());
    }
  });

  m.attr("DEFAULT_ENUMERATION_CAP") = kDefaultEnumerationCap;

  m.def("validate_metric",
        [](const Rows& d, double tol) { validate_metric(Matrix::from_rows(d), tol); },
        py::arg("d"), py::arg("tol") = kMetricTolerance);
  m.def("sp_value",
        [](const Rows& d, const Subset& subset, double theta) {
          return dump(sp_value(metric_of(d), subset, theta));
        },
        py::arg("d"), py::arg("subset"), py::arg("theta"));
  m.def("sp_uniform", &sp_uniform, py::arg("k"), py::arg("s"));
  m.def("select",
        [](const Rows& d, std::size_t k, double theta, const std::string& method,
           std::uint64_t cap) {
          return dump(select(metric_of(d), k, theta, parse_selection_method(method),
                             options_of(cap)));
        },
        py::arg("d"), py::arg("k"), py::arg("theta"), py::arg("method") = "exact",
        py::arg("enumeration_cap") = kDefaultEnumerationCap);
  m.def("decide",
        [](const Rows& d, std::size_t k, double theta, double threshold, std::uint64_t cap) {
          return dump(decide(metric_of(d), k, theta, threshold, options_of(cap)));
        },
        py::arg("d"), py::arg("k"), py::arg("theta"), py::arg("threshold"),
        py::arg("enumeration_cap") = kDefaultEnumerationCap);
  m.def("encode_graph",
        [](std::size_t n, const Edges& edges, std::size_t k, double theta0) {
          auto [metric, inst] = encode_graph(Graph(n, edges), k, theta0);
          return py::make_tuple(metric.distances().to_rows(), dump(inst.params));
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("theta0"));
  m.def("solve_is_via_sp",
        [](std::size_t n, const Edges& edges, std::size_t k, double theta0) {
          return dump(solve_is_via_sp(Graph(n, edges), k, theta0));
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("theta0"));
  m.def("deformation_scan",
        [](const Rows& d, const Subset& subset, std::pair<std::size_t, std::size_t> pair,
           double theta0, double lambda, std::size_t samples) {
          ScanOptions o;
          o.num_samples = samples;
          return dump(deformation_scan(metric_of(d), subset, pair, theta0, lambda, o));
        },
        py::arg("d"), py::arg("subset"), py::arg("pair"), py::arg("theta0"), py::arg("lambda_"),
        py::arg("samples") = kDefaultScanSamples);
  m.def("random_equivalence_suite",
        [](std::uint64_t seed, std::size_t trials, std::size_t n_max,
           const std::vector<double>& theta0_choices, bool with_records) {
          py::gil_scoped_release release;
          const SuiteSummary s = random_equivalence_suite(seed, trials, n_max, theta0_choices);
          return dump_canonical(to_json(s, with_records));
        },
        py::arg("seed"), py::arg("trials"), py::arg("n_max"),
        py::arg("theta0_choices") = std::vector<double>{0.5, 1.0, 3.0},
        py::arg("with_records") = false);
}
