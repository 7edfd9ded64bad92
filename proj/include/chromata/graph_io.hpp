#pragma once

#include <string>

#include "chromata/graph.hpp"

namespace chromata {

enum class GraphFormat { graph6, edge_list, json };

/// Tagged payload; round-trip parse -> serialize -> parse is the identity.
struct GraphSource {
    GraphFormat format = GraphFormat::graph6;
    std::string payload;
};

Graph parse_graph(const GraphSource& source);
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

Graph parse_graph_json(const std::string& text);
std::string to_graph_json(const Graph& g);

/// Heuristic tag detection for CLI input: JSON documents start with '{',
/// edge lists contain whitespace-separated integer pairs, anything else is
/// treated as graph6.
GraphFormat sniff_format(const std::string& text);

const char* format_name(GraphFormat f);
GraphFormat format_from_name(const std::string& name);

}  // namespace chromata
