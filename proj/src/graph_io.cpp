#include "gbt/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "gbt/error.hpp"

namespace gbt {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports the offset just past the offending byte
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error("graph parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + e.what());
  }

  try {
    if (!doc.is_object()) throw Error("graph JSON must be an object");
    if (!doc.contains("vertices") || !doc.contains("edges"))
      throw Error("graph JSON requires 'vertices' and 'edges'");
    auto vertices = doc.at("vertices").get<std::vector<std::string>>();
    std::vector<EdgeSpec> edges;
    for (const auto& e : doc.at("edges")) {
      auto ends = e.at("ends").get<std::vector<std::string>>();
      if (ends.size() != 2) throw Error("edge ends must list exactly two vertices");
      edges.push_back({e.at("id").get<std::string>(), ends[0], ends[1]});
    }
    std::map<std::string, std::vector<std::string>> order;
    if (doc.contains("edge_order"))
      order = doc.at("edge_order").get<std::map<std::string, std::vector<std::string>>>();
    return Graph(std::move(vertices), edges, order);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json out;
  out["vertices"] = g.vertex_names();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    nlohmann::ordered_json rec;
    rec["id"] = e.id;
    rec["ends"] = {g.vertex_name(e.tail), g.vertex_name(e.head)};
    edges.push_back(std::move(rec));
  }
  out["edges"] = std::move(edges);
  nlohmann::ordered_json order = nlohmann::ordered_json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.valence(v) == 0) continue;
    auto list = nlohmann::ordered_json::array();
    for (HalfEdge h : g.half_edges(v)) list.push_back(g.edge(h.edge).id);
    order[g.vertex_name(v)] = std::move(list);
  }
  out["edge_order"] = std::move(order);
  return out;
}

std::string format_graph_json(const Graph& g, int indent) { return graph_to_json(g).dump(indent); }

}  // namespace gbt
