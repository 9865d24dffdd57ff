#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spdiv/selection.hpp"

namespace spdiv::cli {

enum class Command { kEval, kSelect, kDecide, kReduce, kVerify, kSuite };
enum class OutputFormat { kText, kJson };

struct RunConfig {
  Command command = Command::kEval;
  double theta = 1.0;
  std::optional<std::size_t> k;
  std::optional<double> threshold;
  bool reduction_threshold = false;
  SelectionMethod method = SelectionMethod::kExact;
  std::optional<std::string> metric_path;
  std::optional<std::string> graph_path;
  std::optional<Subset> subset;
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  std::optional<double> lambda;  // verify on plain metrics
  OutputFormat format = OutputFormat::kText;
  std::uint64_t seed = 42;
  std::size_t samples = 33;
  std::size_t neumann_order = 8;
  std::size_t trials = 200;
  std::size_t n_max = 9;
  std::vector<double> theta0_choices{0.5, 1.0, 3.0};
  bool with_records = false;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

// Executes a validated config; the report goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and runs. SP_ENUM_CAP in the
// environment overrides the enumeration cap unless --enum-cap is given.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spdiv::cli
