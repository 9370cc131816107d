#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gbt {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  std::string id;
  VertexId tail = 0;  // ends[0]
  VertexId head = 0;  // ends[1]

  bool is_loop() const { return tail == head; }
};

/// One end of an edge. `end` is 0 for the tail and 1 for the head.
struct HalfEdge {
  EdgeId edge = 0;
  int end = 0;

  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

/// Input record for an edge, addressed by vertex names.
struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
};

/// Finite multigraph with loops, parallel edges and a fixed ordering of the
/// half-edges at every vertex. Immutable once constructed.
///
/// The ordering at a vertex lists edge ids; a loop appears twice, the first
/// occurrence standing for its tail end and the second for its head end.
/// Vertices without an explicit ordering get declaration order.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
        const std::map<std::string, std::vector<std::string>>& edge_order = {});

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view id) const;
  /// Throws gbt::Error for unknown names.
  VertexId vertex(std::string_view name) const;
  EdgeId edge_index(std::string_view id) const;

  /// Half-edges at v in the fixed order.
  std::span<const HalfEdge> half_edges(VertexId v) const { return order_.at(v); }
  std::size_t valence(VertexId v) const { return order_.at(v).size(); }

  VertexId endpoint(HalfEdge h) const;
  /// The endpoint opposite to h.
  VertexId far_end(HalfEdge h) const;
  /// 1-based position of half-edge h in the ordering at its endpoint.
  std::size_t half_edge_position(HalfEdge h) const;

  /// True when v and w are joined by at least one edge.
  bool adjacent(VertexId v, VertexId w) const;
  /// Distinct neighbours of v (excluding v itself), sorted.
  std::vector<VertexId> neighbours(VertexId v) const;

  std::size_t component_count() const;
  bool connected() const { return vertex_count() > 0 && component_count() == 1; }
  /// E - V + C.
  long first_betti_number() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> order_;
  std::unordered_map<std::string, VertexId> vertex_lookup_;
  std::unordered_map<std::string, EdgeId> edge_lookup_;
};

std::size_t valence(const Graph& g, std::string_view v);

/// Vertices of valence at least 3, in declaration order.
std::vector<VertexId> essential_vertices(const Graph& g);
std::vector<std::string> essential_vertex_names(const Graph& g);
/// Number of essential vertices.
std::size_t essential_count(const Graph& g);
bool is_essential(const Graph& g, VertexId v);

/// Subdivides so that no essential vertex carries a loop and distinct
/// essential vertices have disjoint closed stars. Idempotent.
///
/// Edge (a, b) is cut into pieces:
///   3  if it is a loop at an essential vertex or both ends are essential,
///   2  if exactly one end v is essential and the other end x is shared:
///      x is adjacent to a second essential vertex, or another edge joins v
///      and x,
///   1  otherwise.
/// Requires a connected graph.
Graph paper_subdivide(const Graph& g);

/// Cuts every edge into k + 1 pieces. Requires a connected graph and k >= 1.
Graph abrams_subdivide(const Graph& g, int k);

/// Cuts each listed edge into the given number of pieces. Fresh vertices are
/// named "<edge>.v<i>" and fresh edges "<edge>.e<j>", counted from the tail.
Graph subdivide_edges(const Graph& g, const std::vector<int>& pieces);

/// Sufficient condition for the cube complex model with k particles:
/// distinct essential vertices at distance >= k - 1 and every cycle of
/// length >= k + 1.
bool sufficiently_subdivided(const Graph& g, int k);

/// Length of the shortest cycle, counting loops as 1 and parallel pairs as 2;
/// nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Vertices of the closed star of v: v and every endpoint of an incident edge.
std::vector<VertexId> closed_star_vertices(const Graph& g, VertexId v);

/// True iff no vertex or edge lies in both closed stars.
bool closed_stars_disjoint(const Graph& g, std::string_view v, std::string_view w);

/// Local model of the star embedding at an essential vertex: the first three
/// half-edges in the fixed ordering and their far endpoints.
struct StarEmbedding {
  VertexId center = 0;
  std::array<HalfEdge, 3> arms{};
  std::array<VertexId, 3> boundary{};
};

StarEmbedding star_embedding(const Graph& g, std::string_view v);
StarEmbedding star_embedding(const Graph& g, VertexId v);

}  // namespace gbt
