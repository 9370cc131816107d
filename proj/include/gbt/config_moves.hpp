#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbt/graph.hpp"
#include "gbt/partitions.hpp"
#include "gbt/theta_word.hpp"

namespace gbt {

/// Ordered configuration of k particles on vertices; positions[i] holds
/// particle i + 1.
struct DiscreteConfiguration {
  std::vector<VertexId> positions;

  std::size_t size() const { return positions.size(); }
  VertexId at(int particle) const { return positions.at(static_cast<std::size_t>(particle - 1)); }
  /// Particle (1-based) sitting at v, or 0.
  int occupant(VertexId v) const;

  friend bool operator==(const DiscreteConfiguration&, const DiscreteConfiguration&) = default;
};

DiscreteConfiguration make_configuration(const Graph& g, const std::vector<std::string>& names);
/// Throws gbt::Error unless positions are pairwise distinct vertices of g.
void validate(const Graph& g, const DiscreteConfiguration& c);

/// Particle `particle` crosses `edge` from `from` to `to`.
struct Move {
  int particle = 1;
  VertexId from = 0;
  VertexId to = 0;
  EdgeId edge = 0;

  Move reversed() const { return {particle, to, from, edge}; }
  friend bool operator==(const Move&, const Move&) = default;
};

/// Throws gbt::Error on a collision, a particle not at `from`, or an edge
/// that does not join `from` and `to`.
DiscreteConfiguration apply(const Graph& g, const DiscreteConfiguration& c, const Move& mv);

/// Closed edge path in the ordered discrete configuration space.
struct LoopSpec {
  DiscreteConfiguration base;
  std::vector<Move> moves;
};

/// Replays the moves; throws gbt::Error if a move is invalid or the path
/// does not return to the base.
void validate(const Graph& g, const LoopSpec& loop);

/// Configurations visited by the loop, base first and last.
std::vector<DiscreteConfiguration> trajectory(const Graph& g, const LoopSpec& loop);

/// True when, throughout the loop, at most one particle is in the open star
/// of w (at w or crossing an edge incident to w).
bool stays_local(const Graph& g, const LoopSpec& loop, VertexId w);

/// path * loop * path^{-1}, based at the start of `path`.
LoopSpec conjugate(const LoopSpec& loop, const DiscreteConfiguration& start,
                   const std::vector<Move>& path);
/// Concatenation of loops sharing a base.
LoopSpec concatenate(const std::vector<LoopSpec>& loops);

/// "p<i>: <from> -> <to> [<edge-id>]".
std::string format_move(const Graph& g, const Move& mv);
std::string format_moves(const Graph& g, const std::vector<Move>& moves);

/// The exchange loop on one star: the pair's first particle plays particle 1
/// of the six-segment loop (v1, e23) (e12, v3) (v2, e31) (e23, v1) (v3, e12)
/// (e31, v2), each segment two moves through the centre.
///
/// `start` must put pair.first on boundary 1, pair.second on boundary 2, and
/// every other particle outside the closed star of the centre.
LoopSpec build_epsilon(const Graph& g, const StarEmbedding& emb, std::pair<int, int> pair,
                       const DiscreteConfiguration& start);

/// Product loop of a binary W-partition: one exchange loop per vertex of W,
/// all based at the configuration placing lambda(v) on boundary vertices 1
/// and 2 of the star at v (smaller index on boundary 1).
struct PhiLambda {
  DiscreteConfiguration base;
  std::vector<std::pair<std::string, LoopSpec>> loops;  // in W order

  const LoopSpec& loop(std::string_view vertex) const;
};

PhiLambda build_phi_lambda(const Graph& g, const BinaryWPartition& lambda);

/// Shortest move sequence between two configurations, found by breadth-first
/// search of the ordered discrete configuration graph. Throws gbt::Error if
/// the target is unreachable, gbt::ResourceError past `state_cap` states.
std::vector<Move> build_base_path(const Graph& g, const DiscreteConfiguration& from,
                                  const DiscreteConfiguration& to,
                                  std::size_t state_cap = 20'000'000);

/// Image of the loop under projection to the tracked pair followed by the
/// quotient onto the theta graph at w. Each visit of a tracked particle to w
/// that enters along half-edge i and leaves along half-edge j contributes
/// gamma(i, j), with i, j positions in the ordering at w.
ThetaWord q_project(const Graph& g, const LoopSpec& loop, std::pair<int, int> tracked, VertexId w);

}  // namespace gbt
