#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "herencode/graph.hpp"

namespace herencode {

enum class Format { Graph6, EdgeList, BipartiteEdgeList };

// "graph6", "edge-list", "bipartite-edge-list"; throws std::invalid_argument.
Format format_from_name(std::string_view name);
std::string format_name(Format f);

using AnyGraph = std::variant<Graph, BipartiteGraph>;
const Graph& as_graph(const AnyGraph& g);

// graph6 without trailing newline. Labels are not stored.
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" prefix and one trailing newline.
Graph from_graph6(std::string_view text);

// "n\n" followed by "u v\n" for every edge u < v in lexicographic order.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// As edge-list with a second line "top: i j k".
std::string to_bipartite_edge_list(const BipartiteGraph& g);
BipartiteGraph from_bipartite_edge_list(std::string_view text);

AnyGraph parse_graph(std::string_view text, Format f);
std::string serialize_graph(const AnyGraph& g, Format f);

// Splits a multi-graph graph6 file into its non-empty lines.
std::vector<std::string> split_graph6_lines(std::string_view text);

}  // namespace herencode
