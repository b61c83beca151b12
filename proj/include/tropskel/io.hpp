#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tropskel/divisor.hpp"
#include "tropskel/pl_function.hpp"
#include "tropskel/synth.hpp"
#include "tropskel/tropical.hpp"
#include "tropskel/weighted.hpp"

namespace tropskel {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tropskel/1";

/// Rationals travel as "p/q" strings; plain JSON integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);

/// {"schema", "vertices": [{"id", "weight"}], "edges": [{"id", "ends": [tail, head],
/// "length"}], "rays": [{"id", "base"}]}
Json graph_to_json(const MetricGraph& g);
MetricGraph graph_from_json(const Json& j);

/// [{"at": point label, "coeff"}] in point order.
Json divisor_to_json(const MetricGraph& g, const Divisor& d);
Divisor divisor_from_json(const MetricGraph& g, const Json& j, const std::string& where = "");

/// {"vertices": {id: value}, "edges": {id: [[offset, value], ...]},
///  "rays": {id: {"knots": [[offset, value], ...], "slope"}}}
/// Edge knots are interior breakpoints only; absent edges are linear.
Json function_to_json(const MetricGraph& g, const PLFunction& f);
PLFunction function_from_json(const MetricGraph& g, const Json& j, const std::string& where = "");

/// {"schema", "graph", "base", "functions": [...], "labels": [...]}
Json map_to_json(const TropMap& m, const std::vector<std::string>& labels = {});
TropMap map_from_json(const Json& j);

Json certificate_to_json(const TropMap& m, const FaithfulnessCertificate& c);
Json cell_to_json(const MetricGraph& g, const Cell& c);
Json islands_to_json(const MetricGraph& g, const IslandDecomposition& isl);
Json good_report_to_json(const MetricGraph& g, const GoodDivisorReport& r);

/// Reads and parses a JSON file; FormatError carries file, line and column.
Json read_json_file(const std::string& path);

}  // namespace tropskel
