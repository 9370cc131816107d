#include "gbt/cube_complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "gbt/error.hpp"

namespace gbt {

std::size_t cell_cap_from_env() {
  if (const char* s = std::getenv("GBT_CELL_CAP"); s && *s) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw Error("GBT_CELL_CAP must be a positive integer");
  }
  return kDefaultCellCap;
}

CubeComplex::CubeComplex(const Graph& g, int k, bool ordered, const CubeBuildOptions& options)
    : graph_(g), k_(k), ordered_(ordered) {
  if (k < 1) throw Error("cube complex needs at least one particle");
  if (options.check_subdivision && !sufficiently_subdivided(g, k))
    throw Error("graph is not sufficiently subdivided for " + std::to_string(k) +
                " particles; apply abrams_subdivide first");
  const int natural = std::min<int>(k, static_cast<int>(g.edge_count()));
  dim_limit_ = options.max_dim ? std::min(*options.max_dim, natural) : natural;
  if (dim_limit_ < 0) throw Error("max_dim must be nonnegative");
  truncated_ = dim_limit_ < natural;
  cells_.assign(static_cast<std::size_t>(dim_limit_) + 1, {});
  enumerate(options.cell_cap);
  build_boundaries();
}

void CubeComplex::enumerate(std::size_t cap) {
  const Graph& g = graph_;
  const std::uint32_t V = static_cast<std::uint32_t>(g.vertex_count());
  const std::uint32_t N = V + static_cast<std::uint32_t>(g.edge_count());
  std::vector<int> blocked(g.vertex_count(), 0);
  std::vector<std::uint32_t> current;
  std::size_t total = 0;

  auto closure = [&](std::uint32_t c, int delta) {
    if (c < V) {
      blocked[c] += delta;
    } else {
      const Edge& e = g.edge(c - V);
      blocked[e.tail] += delta;
      if (e.head != e.tail) blocked[e.head] += delta;
    }
  };
  auto free_cell = [&](std::uint32_t c) {
    if (c < V) return blocked[c] == 0;
    const Edge& e = g.edge(c - V);
    return blocked[e.tail] == 0 && blocked[e.head] == 0;
  };

  auto recurse = [&](auto&& self, std::uint32_t start, int edges) -> void {
    if (current.size() == static_cast<std::size_t>(k_)) {
      auto& bucket = cells_[static_cast<std::size_t>(edges)];
      bucket.insert(bucket.end(), current.begin(), current.end());
      if (++total > cap)
        throw ResourceError("cube complex exceeds the cell cap of " + std::to_string(cap));
      return;
    }
    for (std::uint32_t c = ordered_ ? 0 : start; c < N; ++c) {
      const int e = edges + (c >= V ? 1 : 0);
      if (e > dim_limit_ || !free_cell(c)) continue;
      closure(c, +1);
      current.push_back(c);
      self(self, c + 1, e);
      current.pop_back();
      closure(c, -1);
    }
  };
  recurse(recurse, 0, 0);
}

std::size_t CubeComplex::cell_count(int p) const {
  if (p < 0 || p > top_dimension()) return 0;
  return cells_[static_cast<std::size_t>(p)].size() / static_cast<std::size_t>(k_);
}

std::size_t CubeComplex::total_cells() const {
  std::size_t n = 0;
  for (int p = 0; p <= top_dimension(); ++p) n += cell_count(p);
  return n;
}

std::span<const std::uint32_t> CubeComplex::cell(int p, std::size_t i) const {
  const auto& bucket = cells_.at(static_cast<std::size_t>(p));
  const std::size_t k = static_cast<std::size_t>(k_);
  return std::span<const std::uint32_t>(bucket.data() + i * k, k);
}

std::string CubeComplex::cell_name(int p, std::size_t i) const {
  const Graph& g = graph_;
  std::string out = ordered_ ? "(" : "{";
  bool first = true;
  for (std::uint32_t c : cell(p, i)) {
    if (!first) out += ", ";
    first = false;
    out += c < g.vertex_count() ? g.vertex_name(c) : g.edge(c - g.vertex_count()).id;
  }
  return out + (ordered_ ? ")" : "}");
}

std::size_t CubeComplex::index_of(int p, std::span<const std::uint32_t> key) const {
  const auto& bucket = cells_.at(static_cast<std::size_t>(p));
  const std::size_t k = static_cast<std::size_t>(k_);
  std::size_t lo = 0, hi = bucket.size() / k;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto* c = bucket.data() + mid * k;
    if (std::lexicographical_compare(c, c + k, key.begin(), key.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo * k >= bucket.size() || !std::equal(key.begin(), key.end(), bucket.data() + lo * k))
    throw Error("internal: boundary face missing from the complex");
  return lo;
}

void CubeComplex::build_boundaries() {
  const Graph& g = graph_;
  const std::uint32_t V = static_cast<std::uint32_t>(g.vertex_count());
  boundary_.assign(cells_.size(), {});
  std::vector<std::uint32_t> face(static_cast<std::size_t>(k_));
  std::vector<std::pair<std::uint32_t, int>> acc;

  for (int p = 1; p <= top_dimension(); ++p) {
    SparseMatrix& m = boundary_[static_cast<std::size_t>(p)];
    m.rows = cell_count(p - 1);
    m.cols = cell_count(p);
    m.columns.resize(m.cols);
    for (std::size_t i = 0; i < m.cols; ++i) {
      const auto c = cell(p, i);
      acc.clear();
      int slot = 0;
      for (std::size_t s = 0; s < c.size(); ++s) {
        if (c[s] < V) continue;
        const Edge& e = g.edge(c[s] - V);
        const int sign = (slot % 2 == 0) ? 1 : -1;
        ++slot;
        for (auto [vertex, coeff] : {std::pair{e.head, sign}, std::pair{e.tail, -sign}}) {
          std::copy(c.begin(), c.end(), face.begin());
          face[s] = static_cast<std::uint32_t>(vertex);
          if (!ordered_) std::sort(face.begin(), face.end());
          acc.push_back({static_cast<std::uint32_t>(index_of(p - 1, face)), coeff});
        }
      }
      std::sort(acc.begin(), acc.end());
      auto& col = m.columns[i];
      for (std::size_t a = 0; a < acc.size();) {
        std::size_t b = a;
        int sum = 0;
        while (b < acc.size() && acc[b].first == acc[a].first) sum += acc[b++].second;
        if (sum != 0) col.push_back({acc[a].first, sum});
        a = b;
      }
    }
  }
}

long CubeComplex::euler_characteristic() const {
  long chi = 0;
  for (int p = 0; p <= top_dimension(); ++p)
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(cell_count(p));
  return chi;
}

long BettiVector::alternating_sum() const {
  long s = 0;
  for (std::size_t d = 0; d < betti.size(); ++d) s += (d % 2 == 0 ? 1 : -1) * static_cast<long>(betti[d]);
  return s;
}

BettiVector betti(const CubeComplex& c, std::optional<int> max_dim) {
  // A truncated complex lacks the cells bounding its top dimension.
  int top = c.truncated() ? c.top_dimension() - 1 : c.top_dimension();
  if (max_dim) top = std::min(top, *max_dim);
  BettiVector out;
  if (top < 0) return out;
  out.ranks.assign(static_cast<std::size_t>(top) + 2, 0);
  for (int p = 1; p <= top + 1 && p <= c.top_dimension(); ++p) {
    RankResult r = exact_rank(c.boundary(p));
    out.ranks[static_cast<std::size_t>(p)] = r.rank;
    out.arbitrary_precision = out.arbitrary_precision || r.arbitrary_precision;
  }
  for (int d = 0; d <= top; ++d) {
    const auto n = c.cell_count(d);
    out.betti.push_back(n - out.ranks[static_cast<std::size_t>(d)] -
                        out.ranks[static_cast<std::size_t>(d) + 1]);
  }
  out.ranks.resize(static_cast<std::size_t>(top) + 1);
  return out;
}

bool boundary_squared_zero(const CubeComplex& c) {
  for (int p = 2; p <= c.top_dimension(); ++p)
    if (multiply(c.boundary(p - 1), c.boundary(p)).nonzeros() != 0) return false;
  return true;
}

std::vector<std::size_t> betti_mod_p(const CubeComplex& c, std::uint32_t p) {
  const int top = c.truncated() ? c.top_dimension() - 1 : c.top_dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int q = 1; q <= top + 1 && q <= c.top_dimension(); ++q) ranks[static_cast<std::size_t>(q)] = rank_mod_p(c.boundary(q), p);
  std::vector<std::size_t> out;
  for (int d = 0; d <= top; ++d)
    out.push_back(c.cell_count(d) - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d) + 1]);
  return out;
}

NonvanishingCertificate certify_nonvanishing(const Graph& g, int d, std::size_t cell_cap) {
  const auto m = static_cast<int>(essential_count(g));
  if (d < 2 || d > m)
    throw Error("certify_nonvanishing needs 2 <= d <= m(G) (d = " + std::to_string(d) +
                ", m = " + std::to_string(m) + ")");
  const int k = 2 * d;
  const Graph sub = abrams_subdivide(g, k);
  CubeBuildOptions options;
  options.max_dim = d + 1;
  options.cell_cap = cell_cap;
  const CubeComplex c(sub, k, false, options);

  NonvanishingCertificate cert;
  cert.d = d;
  cert.k = k;
  cert.cell_cap = cell_cap;
  for (int p = 0; p <= c.top_dimension(); ++p) cert.cell_counts.push_back(c.cell_count(p));
  const RankResult low = exact_rank(c.boundary(d));
  RankResult high;
  if (d + 1 <= c.top_dimension()) high = exact_rank(c.boundary(d + 1));
  cert.arbitrary_precision = low.arbitrary_precision || high.arbitrary_precision;
  cert.betti_d = c.cell_count(d) - low.rank - high.rank;
  cert.nonvanishing = cert.betti_d > 0;
  cert.note =
      "b_" + std::to_string(d) + " of the unordered discretized configuration space of " +
      std::to_string(k) + " particles (every edge cut into " + std::to_string(k + 1) +
      " pieces), ranks exact over Q; the finite cover by the ordered space injects rational "
      "homology (transfer), so the ordered space has nonzero H_" + std::to_string(d) +
      " as well";
  return cert;
}

void write_chain_complex(std::ostream& out, const CubeComplex& c) {
  out << "# chain complex k=" << c.particles() << " ordered=" << (c.ordered() ? 1 : 0)
      << " top=" << c.top_dimension() << "\n";
  for (int p = 0; p <= c.top_dimension(); ++p) {
    out << "dimension " << p << " cells " << c.cell_count(p) << "\n";
    for (std::size_t i = 0; i < c.cell_count(p); ++i) out << i << " " << c.cell_name(p, i) << "\n";
  }
  for (int p = 1; p <= c.top_dimension(); ++p) {
    const SparseMatrix& m = c.boundary(p);
    out << "boundary " << p << " rows " << m.rows << " cols " << m.cols << " nonzeros "
        << m.nonzeros() << "\n";
    for (std::size_t col = 0; col < m.cols; ++col)
      for (const auto& [row, v] : m.columns[col]) out << row << " " << col << " " << v << "\n";
  }
}

}  // namespace gbt
