#pragma once

#include <string>

#include "gbt/graph.hpp"
#include "gbt/graph_io.hpp"

namespace gbt::test {

inline Graph sample(const std::string& name) {
  return load_graph_file(std::string(GBT_DATA_DIR) + "/" + name + ".json");
}

inline Graph star_graph(int n) {
  std::vector<std::string> vertices{"c"};
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= n; ++i) {
    vertices.push_back("a" + std::to_string(i));
    edges.push_back({"e" + std::to_string(i), "c", "a" + std::to_string(i)});
  }
  return Graph(vertices, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    edges.push_back({"e" + std::to_string(i), vertices[static_cast<std::size_t>(i)],
                     vertices[static_cast<std::size_t>((i + 1) % n)]});
  return Graph(vertices, edges);
}

}  // namespace gbt::test
