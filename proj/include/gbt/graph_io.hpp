#pragma once

#include <string>
#include <string_view>

#include "gbt/graph.hpp"
#include "json.hpp"

namespace gbt {

/// Parses the JSON graph format
///   {"vertices":[...],"edges":[{"id":..,"ends":[a,b]},...],"edge_order":{..}}
/// Keys may appear in any order; edge_order is optional. Syntax errors are
/// reported as gbt::Error with line and column.
Graph parse_graph_json(std::string_view text);
Graph load_graph_file(const std::string& path);

/// Serialized with keys in the canonical order vertices, edges, edge_order.
nlohmann::ordered_json graph_to_json(const Graph& g);
std::string format_graph_json(const Graph& g, int indent = -1);

/// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

}  // namespace gbt
