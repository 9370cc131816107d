#include "gbt/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "gbt/error.hpp"

namespace gbt {

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
             const std::map<std::string, std::vector<std::string>>& edge_order)
    : vertex_names_(std::move(vertices)) {
  for (VertexId v = 0; v < vertex_names_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertex_names_[v], v).second)
      throw Error("duplicate vertex name '" + vertex_names_[v] + "'");
  }
  order_.resize(vertex_names_.size());
  edges_.reserve(edges.size());
  for (const EdgeSpec& spec : edges) {
    if (!edge_lookup_.emplace(spec.id, edges_.size()).second)
      throw Error("duplicate edge id '" + spec.id + "'");
    auto tail = find_vertex(spec.tail);
    auto head = find_vertex(spec.head);
    if (!tail || !head)
      throw Error("edge '" + spec.id + "' names an unknown vertex");
    EdgeId e = edges_.size();
    edges_.push_back({spec.id, *tail, *head});
    order_[*tail].push_back({e, 0});
    order_[*head].push_back({e, 1});
  }

  for (const auto& [name, ids] : edge_order) {
    VertexId v = vertex(name);
    std::vector<HalfEdge> custom;
    custom.reserve(ids.size());
    std::vector<int> seen(edges_.size(), 0);
    for (const std::string& id : ids) {
      EdgeId e = edge_index(id);
      const Edge& ed = edges_[e];
      if (ed.tail != v && ed.head != v)
        throw Error("edge_order at '" + name + "' lists non-incident edge '" + id + "'");
      int occurrence = seen[e]++;
      if (ed.is_loop()) {
        if (occurrence > 1)
          throw Error("edge_order at '" + name + "' repeats loop '" + id + "'");
        custom.push_back({e, occurrence});
      } else {
        if (occurrence > 0)
          throw Error("edge_order at '" + name + "' repeats edge '" + id + "'");
        custom.push_back({e, ed.tail == v ? 0 : 1});
      }
    }
    if (custom.size() != order_[v].size())
      throw Error("edge_order at '" + name + "' is not a permutation of its half-edges");
    order_[v] = std::move(custom);
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error("unknown vertex '" + std::string(name) + "'");
  return *v;
}

EdgeId Graph::edge_index(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) throw Error("unknown edge '" + std::string(id) + "'");
  return *e;
}

VertexId Graph::endpoint(HalfEdge h) const {
  const Edge& e = edges_.at(h.edge);
  return h.end == 0 ? e.tail : e.head;
}

VertexId Graph::far_end(HalfEdge h) const {
  const Edge& e = edges_.at(h.edge);
  return h.end == 0 ? e.head : e.tail;
}

std::size_t Graph::half_edge_position(HalfEdge h) const {
  const auto& order = order_.at(endpoint(h));
  auto it = std::find(order.begin(), order.end(), h);
  return static_cast<std::size_t>(it - order.begin()) + 1;
}

bool Graph::adjacent(VertexId v, VertexId w) const {
  for (HalfEdge h : order_.at(v))
    if (far_end(h) == w) return true;
  return false;
}

std::vector<VertexId> Graph::neighbours(VertexId v) const {
  std::vector<VertexId> out;
  for (HalfEdge h : order_.at(v)) {
    VertexId w = far_end(h);
    if (w != v) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Graph::component_count() const {
  std::vector<bool> seen(vertex_count(), false);
  std::size_t components = 0;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<VertexId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (HalfEdge h : order_[v]) {
        VertexId w = far_end(h);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

long Graph::first_betti_number() const {
  return static_cast<long>(edge_count()) - static_cast<long>(vertex_count()) +
         static_cast<long>(component_count());
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_names_ != b.vertex_names_ || a.order_ != b.order_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head) return false;
  }
  return true;
}

std::size_t valence(const Graph& g, std::string_view v) { return g.valence(g.vertex(v)); }

bool is_essential(const Graph& g, VertexId v) { return g.valence(v) >= 3; }

std::vector<VertexId> essential_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (is_essential(g, v)) out.push_back(v);
  return out;
}

std::vector<std::string> essential_vertex_names(const Graph& g) {
  std::vector<std::string> out;
  for (VertexId v : essential_vertices(g)) out.push_back(g.vertex_name(v));
  return out;
}

std::size_t essential_count(const Graph& g) { return essential_vertices(g).size(); }

Graph subdivide_edges(const Graph& g, const std::vector<int>& pieces) {
  if (pieces.size() != g.edge_count())
    throw Error("subdivide_edges: one piece count per edge required");

  std::vector<std::string> vertices = g.vertex_names();
  std::vector<EdgeSpec> edges;
  // Name of the sub-edge carrying each end of each original edge.
  std::vector<std::array<std::string, 2>> end_piece(g.edge_count());
  std::map<std::string, std::vector<std::string>> order;

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const int n = pieces[e];
    if (n < 1) throw Error("subdivide_edges: piece count must be positive");
    if (n == 1) {
      edges.push_back({ed.id, g.vertex_name(ed.tail), g.vertex_name(ed.head)});
      end_piece[e] = {ed.id, ed.id};
      continue;
    }
    std::vector<std::string> chain{g.vertex_name(ed.tail)};
    for (int i = 1; i < n; ++i) {
      std::string name = ed.id + ".v" + std::to_string(i);
      vertices.push_back(name);
      chain.push_back(name);
    }
    chain.push_back(g.vertex_name(ed.head));
    for (int j = 1; j <= n; ++j) {
      std::string id = ed.id + ".e" + std::to_string(j);
      edges.push_back({id, chain[j - 1], chain[j]});
      if (j > 1) order[chain[j - 1]].push_back(id);
      if (j < n) order[chain[j]].push_back(id);
    }
    end_piece[e] = {ed.id + ".e1", ed.id + ".e" + std::to_string(n)};
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& list = order[g.vertex_name(v)];
    for (HalfEdge h : g.half_edges(v)) list.push_back(end_piece[h.edge][h.end]);
  }
  return Graph(std::move(vertices), edges, order);
}

Graph paper_subdivide(const Graph& g) {
  if (!g.connected()) throw Error("paper_subdivide: graph is not connected");

  std::vector<int> pieces(g.edge_count(), 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const bool tail_ess = is_essential(g, ed.tail);
    const bool head_ess = is_essential(g, ed.head);
    if (ed.is_loop()) {
      if (tail_ess) pieces[e] = 3;
      continue;
    }
    if (tail_ess && head_ess) {
      pieces[e] = 3;
      continue;
    }
    if (!tail_ess && !head_ess) continue;
    const VertexId v = tail_ess ? ed.tail : ed.head;
    const VertexId x = tail_ess ? ed.head : ed.tail;
    bool shared = false;
    for (HalfEdge h : g.half_edges(x)) {
      VertexId y = g.far_end(h);
      if (h.edge == e) continue;
      if (y == v || (y != x && is_essential(g, y))) {
        shared = true;
        break;
      }
    }
    if (shared) pieces[e] = 2;
  }
  return subdivide_edges(g, pieces);
}

Graph abrams_subdivide(const Graph& g, int k) {
  if (k < 1) throw Error("abrams_subdivide: k must be at least 1");
  if (!g.connected()) throw Error("abrams_subdivide: graph is not connected");
  return subdivide_edges(g, std::vector<int>(g.edge_count(), k + 1));
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId s) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::queue<VertexId> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (HalfEdge h : g.half_edges(v)) {
      VertexId w = g.far_end(h);
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> girth(const Graph& g) {
  std::size_t best = kUnreached;
  for (const Edge& e : g.edges())
    if (e.is_loop()) best = 1;
  if (best == 1) return best;

  // BFS from every root; a non-tree edge (a, b) closes a walk of length
  // dist[a] + dist[b] + 1, and the minimum over all roots is the girth.
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
    std::vector<EdgeId> parent_edge(g.vertex_count(), kUnreached);
    std::queue<VertexId> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (HalfEdge h : g.half_edges(v)) {
        if (h.edge == parent_edge[v]) continue;
        VertexId w = g.far_end(h);
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          parent_edge[w] = h.edge;
          q.push(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreached) return std::nullopt;
  return best;
}

bool sufficiently_subdivided(const Graph& g, int k) {
  if (k < 1) throw Error("sufficiently_subdivided: k must be at least 1");
  if (auto c = girth(g); c && *c < static_cast<std::size_t>(k + 1)) return false;
  const auto essential = essential_vertices(g);
  for (VertexId v : essential) {
    auto dist = bfs_distances(g, v);
    for (VertexId w : essential) {
      if (w == v || dist[w] == kUnreached) continue;
      if (dist[w] + 1 < static_cast<std::size_t>(k)) return false;
    }
  }
  return true;
}

std::vector<VertexId> closed_star_vertices(const Graph& g, VertexId v) {
  std::vector<VertexId> out{v};
  for (HalfEdge h : g.half_edges(v)) out.push_back(g.far_end(h));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool closed_stars_disjoint(const Graph& g, std::string_view v, std::string_view w) {
  VertexId a = g.vertex(v);
  VertexId b = g.vertex(w);
  if (a == b) throw Error("closed_stars_disjoint: vertices must be distinct");
  // A shared edge would force a shared vertex, so comparing vertices suffices.
  auto sa = closed_star_vertices(g, a);
  auto sb = closed_star_vertices(g, b);
  std::vector<VertexId> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  return common.empty();
}

StarEmbedding star_embedding(const Graph& g, VertexId v) {
  if (!is_essential(g, v))
    throw Error("star_embedding: vertex '" + g.vertex_name(v) + "' is not essential");
  StarEmbedding emb;
  emb.center = v;
  auto half = g.half_edges(v);
  for (int i = 0; i < 3; ++i) {
    emb.arms[i] = half[i];
    emb.boundary[i] = g.far_end(half[i]);
    if (emb.boundary[i] == v)
      throw Error("star_embedding: loop at '" + g.vertex_name(v) +
                  "'; apply paper_subdivide first");
  }
  if (emb.boundary[0] == emb.boundary[1] || emb.boundary[0] == emb.boundary[2] ||
      emb.boundary[1] == emb.boundary[2])
    throw Error("star_embedding: arms at '" + g.vertex_name(v) +
                "' share an endpoint; apply paper_subdivide first");
  return emb;
}

StarEmbedding star_embedding(const Graph& g, std::string_view v) {
  return star_embedding(g, g.vertex(v));
}

}  // namespace gbt
