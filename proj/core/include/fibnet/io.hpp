#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fibnet/generator.hpp"
#include "fibnet/graph.hpp"

namespace fibnet {

struct GraphMeta {
    std::string model = "custom";
    int t = 0;
    std::string config = "-";
};

struct ImportedGraph {
    LabeledGraph graph;
    GraphMeta meta;
};

/// Line-oriented interchange format:
///   # model=<name> t=<int> config=<fingerprint>
///   <u> <v> <orientation> <birth_step> <origin>        (one edge per line, u < v)
/// Vertex birth/origin are reconstructed from the earliest incident edge; the
/// rectangle registry and rectangle-side flags travel only in the JSON format,
/// so an imported edgelist supports measurement, not further growth.
std::string export_edgelist(const LabeledGraph& g, const GraphMeta& meta);

/// Throws std::runtime_error naming the offending line on malformed input.
ImportedGraph import_edgelist(std::string_view text);

/// Graphviz rendering; one node statement per vertex, one edge statement per edge.
std::string export_dot(const LabeledGraph& g, const GraphMeta& meta);

nlohmann::ordered_json graph_to_json(const LabeledGraph& g, const GraphMeta& meta);
ImportedGraph graph_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json config_to_json(const RuleConfig& config);
RuleConfig config_from_json(const nlohmann::ordered_json& j);

}  // namespace fibnet
