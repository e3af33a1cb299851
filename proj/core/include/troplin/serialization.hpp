#pragma once

#include <json.hpp>

#include "troplin/array_properties.hpp"
#include "troplin/tropical_module.hpp"

namespace troplin {

using Json = nlohmann::ordered_json;

Json dot_array_to_json(const DotArray& p);
DotArray dot_array_from_json(const Json& j);

Json rank_array_to_json(const RankArray& r);
RankArray rank_array_from_json(const Json& j);

Json graph_to_json(const MetricGraph& g);
std::shared_ptr<const MetricGraph> graph_from_json(const Json& j);

Json point_to_json(const MetricGraph& g, const GraphPoint& p);
GraphPoint point_from_json(const MetricGraph& g, const Json& j);

Json divisor_to_json(const MetricGraph& g, const Divisor& d);
Divisor divisor_from_json(const MetricGraph& g, const Json& j);

Json pl_function_to_json(const PLFunction& f);
PLFunction pl_function_from_json(std::shared_ptr<const MetricGraph> g, const Json& j);

Json report_to_json(const PropertyReport& r);

Json module_to_json(const TropicalModule& m);
TropicalModule module_from_json(const Json& j);

Json slope_structure_to_json(const SlopeStructure& s);

// Canonical dump: two-space indent, trailing newline. All CLI output goes
// through this so byte-identical reruns hold.
std::string dump_json(const Json& j);

}  // namespace troplin
