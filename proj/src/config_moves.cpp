#include "gbt/config_moves.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "gbt/error.hpp"

namespace gbt {

int DiscreteConfiguration::occupant(VertexId v) const {
  for (std::size_t i = 0; i < positions.size(); ++i)
    if (positions[i] == v) return static_cast<int>(i) + 1;
  return 0;
}

DiscreteConfiguration make_configuration(const Graph& g, const std::vector<std::string>& names) {
  DiscreteConfiguration c;
  for (const auto& n : names) c.positions.push_back(g.vertex(n));
  validate(g, c);
  return c;
}

void validate(const Graph& g, const DiscreteConfiguration& c) {
  std::vector<VertexId> sorted = c.positions;
  for (VertexId v : sorted)
    if (v >= g.vertex_count()) throw Error("configuration names a vertex outside the graph");
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("configuration places two particles on one vertex");
}

DiscreteConfiguration apply(const Graph& g, const DiscreteConfiguration& c, const Move& mv) {
  if (mv.particle < 1 || static_cast<std::size_t>(mv.particle) > c.size())
    throw Error("move names particle " + std::to_string(mv.particle) + " of " +
                std::to_string(c.size()));
  if (mv.edge >= g.edge_count()) throw Error("move along a nonexistent edge");
  const Edge& e = g.edge(mv.edge);
  const bool joins = (e.tail == mv.from && e.head == mv.to) || (e.head == mv.from && e.tail == mv.to);
  if (!joins || mv.from == mv.to)
    throw Error("edge '" + e.id + "' does not join '" + g.vertex_name(mv.from) + "' and '" +
                g.vertex_name(mv.to) + "'");
  if (c.at(mv.particle) != mv.from)
    throw Error("particle " + std::to_string(mv.particle) + " is not at '" +
                g.vertex_name(mv.from) + "'");
  if (int other = c.occupant(mv.to); other != 0)
    throw Error("collision: particle " + std::to_string(other) + " occupies '" +
                g.vertex_name(mv.to) + "'");
  DiscreteConfiguration next = c;
  next.positions[static_cast<std::size_t>(mv.particle - 1)] = mv.to;
  return next;
}

std::vector<DiscreteConfiguration> trajectory(const Graph& g, const LoopSpec& loop) {
  validate(g, loop.base);
  std::vector<DiscreteConfiguration> out{loop.base};
  for (const Move& mv : loop.moves) out.push_back(apply(g, out.back(), mv));
  return out;
}

void validate(const Graph& g, const LoopSpec& loop) {
  if (trajectory(g, loop).back() != loop.base) throw Error("move sequence does not close up");
}

bool stays_local(const Graph& g, const LoopSpec& loop, VertexId w) {
  DiscreteConfiguration c = loop.base;
  auto at_w = [&](const DiscreteConfiguration& cfg) {
    return std::count(cfg.positions.begin(), cfg.positions.end(), w);
  };
  if (at_w(c) > 1) return false;
  for (const Move& mv : loop.moves) {
    const Edge& e = g.edge(mv.edge);
    const bool crossing = e.tail == w || e.head == w;
    long inside = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (static_cast<int>(i) + 1 == mv.particle) continue;
      if (c.positions[i] == w) ++inside;
    }
    if (crossing) ++inside;
    if (inside > 1) return false;
    c = apply(g, c, mv);
  }
  return true;
}

LoopSpec conjugate(const LoopSpec& loop, const DiscreteConfiguration& start,
                   const std::vector<Move>& path) {
  LoopSpec out{start, path};
  out.moves.insert(out.moves.end(), loop.moves.begin(), loop.moves.end());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.moves.push_back(it->reversed());
  return out;
}

LoopSpec concatenate(const std::vector<LoopSpec>& loops) {
  if (loops.empty()) throw Error("concatenate: no loops");
  LoopSpec out{loops.front().base, {}};
  for (const LoopSpec& l : loops) {
    if (l.base != out.base) throw Error("concatenate: loops have different bases");
    out.moves.insert(out.moves.end(), l.moves.begin(), l.moves.end());
  }
  return out;
}

std::string format_move(const Graph& g, const Move& mv) {
  return "p" + std::to_string(mv.particle) + ": " + g.vertex_name(mv.from) + " -> " +
         g.vertex_name(mv.to) + " [" + g.edge(mv.edge).id + "]";
}

std::string format_moves(const Graph& g, const std::vector<Move>& moves) {
  std::string out;
  for (const Move& mv : moves) out += format_move(g, mv) + "\n";
  return out;
}

LoopSpec build_epsilon(const Graph& g, const StarEmbedding& emb, std::pair<int, int> pair,
                       const DiscreteConfiguration& start) {
  validate(g, start);
  const auto [first, second] = pair;
  const int k = static_cast<int>(start.size());
  if (first == second || first < 1 || second < 1 || first > k || second > k)
    throw Error("epsilon pair must name two distinct particles among 1.." + std::to_string(k));
  if (start.at(first) != emb.boundary[0] || start.at(second) != emb.boundary[1])
    throw Error("epsilon pair must start on boundary vertices 1 and 2 of the star at '" +
                g.vertex_name(emb.center) + "'");
  const auto star = closed_star_vertices(g, emb.center);
  for (int p = 1; p <= k; ++p) {
    if (p == first || p == second) continue;
    if (std::binary_search(star.begin(), star.end(), start.at(p)))
      throw Error("particle " + std::to_string(p) + " is parked inside the closed star of '" +
                  g.vertex_name(emb.center) + "'");
  }

  // (mover, boundary slot left, boundary slot entered), slots 0-based.
  struct Segment {
    int particle;
    int out;
    int in;
  };
  const Segment segments[6] = {{second, 1, 2}, {first, 0, 1}, {second, 2, 0},
                               {first, 1, 2},  {second, 0, 1}, {first, 2, 0}};
  LoopSpec loop{start, {}};
  for (const Segment& s : segments) {
    const HalfEdge out_arm = emb.arms[static_cast<std::size_t>(s.out)];
    const HalfEdge in_arm = emb.arms[static_cast<std::size_t>(s.in)];
    loop.moves.push_back({s.particle, emb.boundary[static_cast<std::size_t>(s.out)], emb.center, out_arm.edge});
    loop.moves.push_back({s.particle, emb.center, emb.boundary[static_cast<std::size_t>(s.in)], in_arm.edge});
  }
  validate(g, loop);
  return loop;
}

const LoopSpec& PhiLambda::loop(std::string_view vertex) const {
  for (const auto& [v, l] : loops)
    if (v == vertex) return l;
  throw Error("no loop at vertex '" + std::string(vertex) + "'");
}

PhiLambda build_phi_lambda(const Graph& g, const BinaryWPartition& lambda) {
  const auto& blocks = lambda.blocks();
  std::vector<StarEmbedding> stars;
  for (const auto& b : blocks) stars.push_back(star_embedding(g, b.vertex));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!closed_stars_disjoint(g, blocks[i].vertex, blocks[j].vertex))
        throw Error("closed stars of '" + blocks[i].vertex + "' and '" + blocks[j].vertex +
                    "' overlap; apply paper_subdivide first");

  PhiLambda out;
  out.base.positions.assign(static_cast<std::size_t>(lambda.k()), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.base.positions[static_cast<std::size_t>(blocks[i].pair[0] - 1)] = stars[i].boundary[0];
    out.base.positions[static_cast<std::size_t>(blocks[i].pair[1] - 1)] = stars[i].boundary[1];
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    out.loops.emplace_back(blocks[i].vertex,
                           build_epsilon(g, stars[i], {blocks[i].pair[0], blocks[i].pair[1]}, out.base));
  return out;
}

std::vector<Move> build_base_path(const Graph& g, const DiscreteConfiguration& from,
                                  const DiscreteConfiguration& to, std::size_t state_cap) {
  validate(g, from);
  validate(g, to);
  if (from.size() != to.size()) throw Error("base path endpoints have different particle counts");
  const std::size_t k = from.size();
  std::size_t bits = 1;
  while ((std::size_t{1} << bits) < g.vertex_count()) ++bits;
  if (bits * k > 64) throw ResourceError("configuration space too large to search");

  auto pack = [&](const DiscreteConfiguration& c) {
    std::uint64_t key = 0;
    for (VertexId v : c.positions) key = (key << bits) | v;
    return key;
  };
  auto unpack = [&](std::uint64_t key) {
    DiscreteConfiguration c;
    c.positions.resize(k);
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (std::size_t i = k; i-- > 0;) {
      c.positions[i] = static_cast<VertexId>(key & mask);
      key >>= bits;
    }
    return c;
  };

  struct Parent {
    std::uint64_t key;
    Move move;
  };
  const std::uint64_t source = pack(from);
  const std::uint64_t target = pack(to);
  std::unordered_map<std::uint64_t, Parent> parent;
  parent.emplace(source, Parent{source, {}});
  std::deque<std::uint64_t> queue{source};
  bool found = source == target;
  while (!queue.empty() && !found) {
    const std::uint64_t key = queue.front();
    queue.pop_front();
    const DiscreteConfiguration c = unpack(key);
    for (std::size_t p = 0; p < k && !found; ++p) {
      const VertexId v = c.positions[p];
      for (HalfEdge h : g.half_edges(v)) {
        const VertexId w = g.far_end(h);
        if (w == v || c.occupant(w) != 0) continue;
        DiscreteConfiguration next = c;
        next.positions[p] = w;
        const std::uint64_t nk = pack(next);
        if (parent.count(nk)) continue;
        parent.emplace(nk, Parent{key, Move{static_cast<int>(p) + 1, v, w, h.edge}});
        if (parent.size() > state_cap)
          throw ResourceError("base path search exceeded " + std::to_string(state_cap) + " states");
        if (nk == target) {
          found = true;
          break;
        }
        queue.push_back(nk);
      }
    }
  }
  if (!found) throw Error("target configuration is unreachable in the discrete model");

  std::vector<Move> path;
  for (std::uint64_t key = target; key != source;) {
    const Parent& p = parent.at(key);
    path.push_back(p.move);
    key = p.key;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

ThetaWord q_project(const Graph& g, const LoopSpec& loop, std::pair<int, int> tracked, VertexId w) {
  if (!is_essential(g, w)) throw Error("q_project: '" + g.vertex_name(w) + "' is not essential");
  const auto [a, b] = tracked;
  const int k = static_cast<int>(loop.base.size());
  if (a == b || a < 1 || b < 1 || a > k || b > k)
    throw Error("q_project: tracked pair must name two distinct particles");
  if (loop.base.at(a) == w || loop.base.at(b) == w)
    throw Error("q_project: a tracked particle sits at '" + g.vertex_name(w) + "' at the base");

  auto position_at_w = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    return static_cast<int>(g.half_edge_position({e, ed.tail == w ? 0 : 1}));
  };

  ThetaWord word(static_cast<int>(g.valence(w)));
  int entered_a = 0, entered_b = 0;  // half-edge position, 0 when outside
  for (const Move& mv : loop.moves) {
    if (mv.particle != a && mv.particle != b) continue;
    int& mine = mv.particle == a ? entered_a : entered_b;
    const int other = mv.particle == a ? entered_b : entered_a;
    if (mv.to == w) {
      if (other != 0)
        throw Error("q_project: both tracked particles in the open star of '" + g.vertex_name(w) + "'");
      mine = position_at_w(mv.edge);
    } else if (mv.from == w) {
      word.append(mine, position_at_w(mv.edge));
      mine = 0;
    }
  }
  if (entered_a != 0 || entered_b != 0) throw Error("q_project: loop ends inside the star");
  return word;
}

}  // namespace gbt
