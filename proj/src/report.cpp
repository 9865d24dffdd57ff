#include "spdiv/report.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "spdiv/error.hpp"

namespace spdiv {
namespace {

Json optional_subset(const std::optional<Subset>& s) {
  return s ? Json(*s) : Json(nullptr);
}

std::optional<Subset> subset_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Subset>();
}

void dump_to(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_to(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_to(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

Graph graph_from(const Json& j) {
  std::vector<Graph::Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  return Graph(j.at("n").get<std::size_t>(), edges);
}

EquivalenceOutcome outcome_from(const Json& j) {
  EquivalenceOutcome o;
  o.n = j.at("graph").at("n").get<std::size_t>();
  o.edge_count = j.at("graph").at("edges").get<std::size_t>();
  o.k = j.at("k").get<std::size_t>();
  o.theta0 = j.at("theta0").get<double>();
  o.lambda = j.at("lambda").get<long>();
  o.threshold = j.at("threshold").get<double>();
  o.sp_max = j.at("sp_max").get<double>();
  o.sp_decision = j.at("sp_decision").get<bool>();
  o.sp_witness = subset_from(j.at("sp_witness"));
  o.witness_independent = j.at("witness_independent").get<bool>();
  o.is_decision = j.at("is_decision").get<bool>();
  o.is_witness = subset_from(j.at("is_witness"));
  o.agree = j.at("agree").get<bool>();
  return o;
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string dump_canonical(const Json& j) {
  std::string out;
  dump_to(j, out);
  return out;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.size()}, {"edges", edges}};
}

Json to_json(const ReductionParameters& p) {
  return Json{{"k", p.k},         {"theta0", p.theta0}, {"lambda", p.lambda},
              {"q", p.q},         {"r", p.r},           {"threshold", p.threshold}};
}

Json to_json(const WeightVector& w) {
  return Json{{"sp_value", w.sp_value}, {"residual_inf", w.residual_inf}, {"w", w.w}};
}

Json to_json(const DominanceCertificate& c) {
  return Json{{"b_norm_inf", c.b_norm_inf}, {"dominant", c.dominant}};
}

Json to_json(const SelectionResult& r) {
  return Json{{"method", to_string(r.method)},
              {"subset", r.subset},
              {"value", r.value},
              {"evaluated", r.evaluated},
              {"skipped", r.skipped}};
}

Json to_json(const Decision& d) {
  return Json{{"feasible", d.feasible},
              {"threshold", d.threshold},
              {"best_value", d.best_value},
              {"witness", optional_subset(d.witness)}};
}

Json to_json(const DeformationReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back(Json{{"t", s.t},
                           {"F", s.value},
                           {"F_prime_formula", s.derivative_formula},
                           {"F_prime_fd", s.derivative_fd},
                           {"min_w", s.min_weight},
                           {"b_norm_inf", s.b_norm_inf}});
  }
  return Json{{"pair", {r.pair.first, r.pair.second}},
              {"subset", r.subset},
              {"theta0", r.theta0},
              {"lambda", r.lambda},
              {"step", r.step},
              {"strictly_increasing", r.strictly_increasing},
              {"min_weight_overall", r.min_weight_overall},
              {"samples", samples}};
}

Json to_json(const NeumannTerm& t) {
  return Json{{"order", t.order},
              {"deviation", t.deviation},
              {"power_norm", t.power_norm},
              {"bound", t.bound}};
}

Json to_json(const PositivityResult& p) {
  return Json{{"min_weight", p.min_weight},
              {"passes", p.passes},
              {"deformations", p.deformations}};
}

Json to_json(const EquivalenceOutcome& o) {
  return Json{{"graph", {{"n", o.n}, {"edges", o.edge_count}}},
              {"k", o.k},
              {"theta0", o.theta0},
              {"lambda", o.lambda},
              {"threshold", o.threshold},
              {"sp_max", o.sp_max},
              {"margin", o.margin()},
              {"sp_decision", o.sp_decision},
              {"sp_witness", optional_subset(o.sp_witness)},
              {"witness_independent", o.witness_independent},
              {"is_decision", o.is_decision},
              {"is_witness", optional_subset(o.is_witness)},
              {"agree", o.agree}};
}

Json to_json(const SuiteSummary& s, bool include_records) {
  Json j{{"seed", s.seed},
         {"trials", s.trials},
         {"n_max", s.n_max},
         {"theta0_choices", s.theta0_choices},
         {"trials_run", s.trials_run},
         {"agreements", s.agreements},
         {"disagreements", s.trials_run - s.agreements},
         {"checks", s.checks},
         {"invalid_witnesses", s.invalid_witnesses},
         {"theta0_independent", s.theta0_independent},
         {"min_gap", s.min_gap ? Json(*s.min_gap) : Json(nullptr)},
         {"first_disagreement", nullptr}};
  if (s.first_disagreement) {
    j["first_disagreement"] = Json{{"trial", s.first_disagreement->trial},
                                   {"outcome", to_json(s.first_disagreement->outcome)}};
  }
  if (include_records) {
    Json records = Json::array();
    for (const auto& r : s.records) {
      Json decisions = Json::array();
      for (bool b : r.is_decisions) decisions.push_back(b);
      records.push_back(Json{{"index", r.index},
                             {"edge_probability", r.edge_probability},
                             {"graph", to_json(r.graph)},
                             {"is_decisions", decisions},
                             {"agree", r.agree}});
    }
    j["records"] = records;
  }
  return j;
}

SuiteSummary suite_summary_from_json(const Json& j) {
  SuiteSummary s;
  s.seed = j.at("seed").get<std::uint64_t>();
  s.trials = j.at("trials").get<std::size_t>();
  s.n_max = j.at("n_max").get<std::size_t>();
  s.theta0_choices = j.at("theta0_choices").get<std::vector<double>>();
  s.trials_run = j.at("trials_run").get<std::size_t>();
  s.agreements = j.at("agreements").get<std::size_t>();
  s.checks = j.at("checks").get<std::size_t>();
  s.invalid_witnesses = j.at("invalid_witnesses").get<std::size_t>();
  s.theta0_independent = j.at("theta0_independent").get<bool>();
  if (!j.at("min_gap").is_null()) s.min_gap = j.at("min_gap").get<double>();
  if (const auto& d = j.at("first_disagreement"); !d.is_null()) {
    s.first_disagreement = Disagreement{d.at("trial").get<std::size_t>(), outcome_from(d.at("outcome"))};
  }
  if (j.contains("records")) {
    for (const auto& r : j.at("records")) {
      TrialRecord rec;
      rec.index = r.at("index").get<std::size_t>();
      rec.edge_probability = r.at("edge_probability").get<double>();
      rec.graph = graph_from(r.at("graph"));
      rec.is_decisions = r.at("is_decisions").get<std::vector<bool>>();
      rec.agree = r.at("agree").get<bool>();
      s.records.push_back(std::move(rec));
    }
  }
  return s;
}

}  // namespace spdiv
