#pragma once

#include <string>

#include <json.hpp>

#include "pcgroups/deciders.hpp"
#include "pcgroups/extension_graph.hpp"
#include "pcgroups/graph.hpp"
#include "pcgroups/universal.hpp"

namespace pcg {

/// Graph file format: {"vertices": [unique strings...],
/// "edges": [[u, v], ...]} with each edge listed once in either
/// orientation. Rejects self-loops, duplicate edges, duplicate or
/// unknown vertex names.
SimplicialGraph graph_from_json(const nlohmann::json& j);
SimplicialGraph load_graph_file(const std::string& path);

nlohmann::ordered_json graph_to_json(const SimplicialGraph& g);
nlohmann::ordered_json classification_to_json(const GraphClassification& c);

/// Graph JSON plus a parallel provenance array of
/// {vertex, base, conjugator, element} records in table order.
nlohmann::ordered_json ball_to_json(const Ball& b);

nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json eq_verdict_to_json(const EqVerdict& v);

}  // namespace pcg
