#include "spdiv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "spdiv/error.hpp"
#include "spdiv/metric.hpp"
#include "spdiv/reduction.hpp"
#include "spdiv/report.hpp"
#include "spdiv/verify.hpp"

namespace spdiv::cli {
namespace {

// Raised for missing/inconsistent flags and unreadable files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t require_k(const RunConfig& c, const char* command) {
  if (!c.k) throw UsageError(std::string(command) + " requires --k");
  return *c.k;
}

// Appends the members of body after the keys already in j.
void merge(Json& j, const Json& body) {
  for (const auto& [key, value] : body.items()) j[key] = value;
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::none_of(j.begin(), j.end(), [](const Json& e) {
      return e.is_structured();
    });
    if (scalars) {
      out << prefix << ":";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? "," : " ") << dump_canonical(j[i]);
      out << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) {
        render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
      }
    }
    return;
  }
  std::string value = j.is_string() ? j.get<std::string>() : dump_canonical(j);
  out << prefix << ": " << value << "\n";
}

class Runner {
 public:
  Runner(const RunConfig& config) : c_(config) { options_.enumeration_cap = c_.enumeration_cap; }

  Json execute() {
    switch (c_.command) {
      case Command::kEval: return eval();
      case Command::kSelect: return select_cmd();
      case Command::kDecide: return decide_cmd();
      case Command::kReduce: return reduce();
      case Command::kVerify: return verify();
      case Command::kSuite: return suite();
    }
    throw UsageError("unknown command");
  }

  const char* operation() const { return op_; }

 private:
  struct Ground {
    FiniteMetric metric;
    std::optional<ReductionInstance> instance;
  };

  Ground load_ground(std::optional<std::size_t> k_for_graph) {
    if (c_.metric_path.has_value() == c_.graph_path.has_value()) {
      throw UsageError("exactly one of --metric or --graph is required");
    }
    if (c_.metric_path) {
      op_ = "metric.parse_metric_csv";
      const Matrix d = parse_metric_csv(read_file(*c_.metric_path));
      op_ = "metric.validate_metric";
      return Ground{validate_metric(d), std::nullopt};
    }
    op_ = "metric.parse_graph";
    const Graph g = parse_graph(read_file(*c_.graph_path));
    if (!k_for_graph) throw UsageError("--graph input requires --k to build the encoding");
    op_ = "metric.encode_graph";
    auto [metric, instance] = encode_graph(g, *k_for_graph, c_.theta);
    return Ground{std::move(metric), std::move(instance)};
  }

  Json eval() {
    if (!c_.subset) throw UsageError("eval requires --subset");
    Ground ground = load_ground(c_.k ? c_.k : std::optional<std::size_t>(c_.subset->size()));
    op_ = "sp-core.sp_value";
    const WeightVector w = sp_value(ground.metric, *c_.subset, c_.theta);
    op_ = "sp-core.dominance_certificate";
    const SimilarityMatrix z = similarity_matrix(ground.metric, *c_.subset, c_.theta);
    Json j{{"command", "eval"},
           {"theta", c_.theta},
           {"subset", *c_.subset},
           {"sp_value", w.sp_value},
           {"residual_inf", w.residual_inf},
           {"w", w.w},
           {"dominance", to_json(dominance_certificate(z))}};
    if (ground.instance) j["reduction"] = to_json(ground.instance->params);
    return j;
  }

  Json select_cmd() {
    const std::size_t k = require_k(c_, "select");
    Ground ground = load_ground(k);
    op_ = c_.method == SelectionMethod::kExact        ? "selection.exact_select"
          : c_.method == SelectionMethod::kGreedyDrop ? "selection.greedy_drop"
                                                      : "selection.greedy_add";
    const SelectionResult r = select(ground.metric, k, c_.theta, c_.method, options_);
    Json j{{"command", "select"}, {"theta", c_.theta}, {"k", k}};
    merge(j, to_json(r));
    return j;
  }

  Json decide_cmd() {
    const std::size_t k = require_k(c_, "decide");
    if (c_.threshold.has_value() == c_.reduction_threshold) {
      throw UsageError("decide requires exactly one of --threshold or --reduction-threshold");
    }
    Ground ground = load_ground(k);
    std::optional<ReductionParameters> params;
    double threshold = 0.0;
    if (c_.reduction_threshold) {
      op_ = "metric.reduction_parameters";
      params = ground.instance ? ground.instance->params : reduction_parameters(k, c_.theta);
      threshold = params->threshold;
    } else {
      threshold = *c_.threshold;
    }
    op_ = "selection.decide";
    const Decision d = decide(ground.metric, k, c_.theta, threshold, options_);
    Json j{{"command", "decide"}, {"theta", c_.theta}, {"k", k}};
    merge(j, to_json(d));
    if (params) j["reduction"] = to_json(*params);
    return j;
  }

  Json reduce() {
    const std::size_t k = require_k(c_, "reduce");
    if (!c_.graph_path) throw UsageError("reduce requires --graph");
    op_ = "metric.parse_graph";
    const Graph g = parse_graph(read_file(*c_.graph_path));
    op_ = "reduction.solve_is_via_sp";
    const EquivalenceOutcome o = solve_is_via_sp(g, k, c_.theta, options_);
    Json j{{"command", "reduce"}};
    merge(j, to_json(o));
    j["reduction"] = to_json(reduction_parameters(k, c_.theta));
    return j;
  }

  Json verify() {
    if (!c_.subset) throw UsageError("verify requires --subset");
    if (!c_.pair) throw UsageError("verify requires --pair");
    Ground ground = load_ground(c_.k ? c_.k : std::optional<std::size_t>(c_.subset->size()));
    double lambda = 0.0;
    if (ground.instance) {
      lambda = static_cast<double>(ground.instance->params.lambda);
    } else if (c_.lambda) {
      lambda = *c_.lambda;
    } else {
      throw UsageError("verify on --metric input requires --lambda");
    }

    op_ = "verify.deformation_scan";
    const DeformationReport report =
        deformation_scan(ground.metric, *c_.subset, *c_.pair, c_.theta, lambda,
                         ScanOptions{c_.samples, kFiniteDifferenceStep});
    op_ = "verify.derivative_identity_check";
    const bool derivative_ok = derivative_identity_check(report, kDerivativeTolerance);
    op_ = "verify.positivity_bound_check";
    const PositivityResult positivity =
        positivity_bound_check(ground.metric, *c_.subset, c_.theta, lambda, c_.samples);
    op_ = "sp-core.dominance_certificate";
    const SimilarityMatrix z = similarity_matrix(ground.metric, *c_.subset, c_.theta);
    const DominanceCertificate cert = dominance_certificate(z);
    op_ = "verify.neumann_partial_sums";
    Json neumann = Json::array();
    for (const auto& term : neumann_partial_sums(z, c_.neumann_order)) {
      neumann.push_back(to_json(term));
    }

    return Json{{"command", "verify"},
                {"lambda", lambda},
                {"strictly_increasing", report.strictly_increasing},
                {"min_w", report.min_weight_overall},
                {"derivative_identity", derivative_ok},
                {"positivity", to_json(positivity)},
                {"dominance", to_json(cert)},
                {"neumann", neumann},
                {"deformation", to_json(report)}};
  }

  Json suite() {
    op_ = "reduction.random_equivalence_suite";
    const SuiteSummary s =
        random_equivalence_suite(c_.seed, c_.trials, c_.n_max, c_.theta0_choices, options_);
    Json j{{"command", "suite"}};
    merge(j, to_json(s, c_.with_records));
    return j;
  }

  const RunConfig& c_;
  SelectionOptions options_;
  const char* op_ = "cli.run";
};

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Runner runner(config);
  try {
    const Json report = runner.execute();
    if (config.format == OutputFormat::kJson) {
      out << dump_canonical(report) << "\n";
    } else {
      render_text(report, "", out);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << runner.operation() << ": " << to_string(e.kind()) << ": " << e.what()
        << "\n";
    return e.is_computational() ? kExitComputation : kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Solow-Polasky diversity: evaluation, subset selection, and the "
               "Independent Set reduction harness",
               "spdiv"};
  app.require_subcommand(1);

  std::string method = "exact";
  std::string format = "text";
  std::vector<std::size_t> pair;
  std::vector<std::size_t> subset;
  std::optional<std::uint64_t> cap;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--metric", config.metric_path, "distance matrix CSV");
    sub->add_option("--graph", config.graph_path, "edge-list graph file");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--theta,--theta0", config.theta, "kernel parameter (> 0)")
        ->capture_default_str();
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--enum-cap", cap, "maximum number of enumerated subsets");
  };

  auto* eval = app.add_subcommand("eval", "SP value of one subset");
  add_input(eval);
  add_common(eval);
  eval->add_option("--subset", subset, "comma-separated point indices")->delimiter(',');
  eval->add_option("--k", config.k, "cardinality used for --graph encodings");

  auto* sel = app.add_subcommand("select", "maximise SP over size-k subsets");
  add_input(sel);
  add_common(sel);
  sel->add_option("--k", config.k)->required();
  sel->add_option("--method", method)
      ->check(CLI::IsMember({"exact", "greedy-drop", "greedy-add"}))
      ->capture_default_str();

  auto* dec = app.add_subcommand("decide", "is there a size-k subset with SP >= T?");
  add_input(dec);
  add_common(dec);
  dec->add_option("--k", config.k)->required();
  auto* thr = dec->add_option("--threshold", config.threshold);
  dec->add_flag("--reduction-threshold", config.reduction_threshold,
                "use T = k/(1+(k-1)r) from the encoding parameters")
      ->excludes(thr);

  auto* red = app.add_subcommand("reduce", "decide Independent Set via SP and cross-check");
  red->add_option("--graph", config.graph_path)->required();
  add_common(red);
  red->add_option("--k", config.k)->required();

  auto* ver = app.add_subcommand("verify", "deformation, positivity and Neumann checks on one subset");
  add_input(ver);
  add_common(ver);
  ver->add_option("--k", config.k, "cardinality used for --graph encodings");
  ver->add_option("--subset", subset)->delimiter(',')->required();
  ver->add_option("--pair", pair, "two subset members a,b")->delimiter(',')->required();
  ver->add_option("--samples", config.samples)->capture_default_str();
  ver->add_option("--lambda", config.lambda, "edge distance for --metric inputs");
  ver->add_option("--neumann-order", config.neumann_order)->capture_default_str();

  auto* su = app.add_subcommand("suite", "seeded random equivalence suite");
  add_common(su);
  su->add_option("--seed", config.seed)->capture_default_str();
  su->add_option("--trials", config.trials)->capture_default_str();
  su->add_option("--n-max", config.n_max)->capture_default_str();
  su->add_option("--theta0-choices", config.theta0_choices)->delimiter(',');
  su->add_flag("--with-records", config.with_records, "include per-trial records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (eval->parsed()) config.command = Command::kEval;
  if (sel->parsed()) config.command = Command::kSelect;
  if (dec->parsed()) config.command = Command::kDecide;
  if (red->parsed()) config.command = Command::kReduce;
  if (ver->parsed()) config.command = Command::kVerify;
  if (su->parsed()) config.command = Command::kSuite;

  if (!subset.empty()) config.subset = subset;
  if (ver->parsed()) {
    if (pair.size() != 2) {
      err << "error: --pair takes exactly two indices\n";
      return kExitUsage;
    }
    config.pair = std::make_pair(pair[0], pair[1]);
  }
  config.method = parse_selection_method(method);
  config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;

  if (cap) {
    config.enumeration_cap = *cap;
  } else if (const char* env = std::getenv("SP_ENUM_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0') {
      err << "error: SP_ENUM_CAP must be a nonnegative integer\n";
      return kExitUsage;
    }
    config.enumeration_cap = value;
  }
  return run(config, out, err);
}

}  // namespace spdiv::cli
