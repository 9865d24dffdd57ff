#pragma once

#include <string>

#include "json.hpp"

#include "spdiv/metric.hpp"
#include "spdiv/reduction.hpp"
#include "spdiv/selection.hpp"
#include "spdiv/sp_core.hpp"
#include "spdiv/verify.hpp"

namespace spdiv {

using Json = nlohmann::ordered_json;

// Fixed-width rendering used by every report: 17 significant digits, always
// with a decimal point or exponent so it reads back as a double. Non-finite
// values have no JSON form and become null.
std::string format_double(double x);

// Compact single-line JSON with insertion-ordered keys and format_double for
// floating-point numbers. dump_canonical(parse(dump_canonical(j))) is
// byte-identical to dump_canonical(j).
std::string dump_canonical(const Json& j);

Json to_json(const Graph& g);
Json to_json(const ReductionParameters& p);
Json to_json(const WeightVector& w);
Json to_json(const DominanceCertificate& c);
Json to_json(const SelectionResult& r);
Json to_json(const Decision& d);
Json to_json(const DeformationReport& r);
Json to_json(const NeumannTerm& t);
Json to_json(const PositivityResult& p);
Json to_json(const EquivalenceOutcome& o);
Json to_json(const SuiteSummary& s, bool include_records = true);

// Reads back a summary written by to_json (records included). Used for the
// committed regression fixture.
SuiteSummary suite_summary_from_json(const Json& j);

}  // namespace spdiv
