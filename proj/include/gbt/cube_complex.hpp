#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbt/graph.hpp"
#include "gbt/sparse_rank.hpp"

namespace gbt {

/// Default cap on the total number of cells; overridden by GBT_CELL_CAP.
inline constexpr std::size_t kDefaultCellCap = 5'000'000;
std::size_t cell_cap_from_env();

struct CubeBuildOptions {
  /// Reject graphs that are not sufficiently subdivided for k.
  bool check_subdivision = true;
  /// Only enumerate cells of dimension <= max_dim.
  std::optional<int> max_dim;
  std::size_t cell_cap = kDefaultCellCap;
};

/// Discretized configuration space of k particles on a graph. A cell is a
/// choice of k graph cells (vertices or edges) with pairwise disjoint
/// closures, as an ordered tuple or as a sorted set. Graph cells are indexed
/// vertices first (0..V-1) then edges (V..V+E-1), both in declaration order;
/// the edge slots of a cell, read in that order, orient it.
class CubeComplex {
 public:
  CubeComplex(const Graph& g, int k, bool ordered, const CubeBuildOptions& options = {});

  int particles() const { return k_; }
  bool ordered() const { return ordered_; }
  /// Highest dimension enumerated.
  int top_dimension() const { return static_cast<int>(cells_.size()) - 1; }
  /// True when cells above top_dimension() exist but were not enumerated.
  bool truncated() const { return truncated_; }
  std::size_t cell_count(int p) const;
  std::size_t total_cells() const;
  /// Graph-cell ids of the i-th p-cell.
  std::span<const std::uint32_t> cell(int p, std::size_t i) const;
  std::string cell_name(int p, std::size_t i) const;

  /// Boundary from p-cells to (p-1)-cells, p >= 1. A p-cell maps to
  /// sum_s (-1)^s (head face - tail face) over its edge slots s.
  const SparseMatrix& boundary(int p) const { return boundary_.at(static_cast<std::size_t>(p)); }

  long euler_characteristic() const;

 private:
  std::size_t index_of(int p, std::span<const std::uint32_t> cell) const;
  void enumerate(std::size_t cap);
  void build_boundaries();

  Graph graph_;
  int k_;
  bool ordered_;
  int dim_limit_;
  bool truncated_ = false;
  std::vector<std::vector<std::uint32_t>> cells_;  // flattened, stride k, lexicographic
  std::vector<SparseMatrix> boundary_;
};

struct BettiVector {
  std::vector<std::size_t> betti;  // betti[d] for d = 0..top
  std::vector<std::size_t> ranks;  // ranks[p] = rank of boundary p; ranks[0] = 0
  bool arbitrary_precision = false;

  long alternating_sum() const;
};

/// Rational Betti numbers up to `max_dim` (default: everything enumerated,
/// except the top dimension is exact only if the complex was not truncated).
BettiVector betti(const CubeComplex& c, std::optional<int> max_dim = std::nullopt);

/// True when every composite boundary(p-1) * boundary(p) vanishes.
bool boundary_squared_zero(const CubeComplex& c);

/// Non-certifying preview of the Betti numbers with ranks over Z/p.
std::vector<std::size_t> betti_mod_p(const CubeComplex& c, std::uint32_t p = 2147483647u);

struct NonvanishingCertificate {
  int d = 0;
  int k = 0;
  std::size_t betti_d = 0;
  std::vector<std::size_t> cell_counts;
  std::size_t cell_cap = 0;
  bool arbitrary_precision = false;
  bool nonvanishing = false;
  std::string note;
};

/// Rational H_d of the unordered complex of k = 2d particles on
/// abrams_subdivide(g, 2d). Requires 2 <= d <= m(g).
NonvanishingCertificate certify_nonvanishing(const Graph& g, int d,
                                             std::size_t cell_cap = kDefaultCellCap);

/// Chain complex export: a header, cells per dimension, and boundary
/// triples "row col value" (0-based).
void write_chain_complex(std::ostream& out, const CubeComplex& c);

}  // namespace gbt
