#include <cstdlib>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gbt/cube_complex.hpp"
#include "gbt/error.hpp"
#include "support.hpp"

using namespace gbt;
using gbt::test::sample;

namespace {

// All k-tuples of graph cells with pairwise disjoint closures, by odometer.
std::vector<std::set<std::vector<std::uint32_t>>> brute_force_cells(const Graph& g, int k, bool ordered) {
  const std::uint32_t V = static_cast<std::uint32_t>(g.vertex_count());
  const std::uint32_t N = V + static_cast<std::uint32_t>(g.edge_count());
  auto closure = [&](std::uint32_t c) {
    if (c < V) return std::set<VertexId>{c};
    const Edge& e = g.edge(c - V);
    return std::set<VertexId>{e.tail, e.head};
  };
  std::vector<std::set<std::vector<std::uint32_t>>> out(static_cast<std::size_t>(k) + 1);
  std::vector<std::uint32_t> t(static_cast<std::size_t>(k), 0);
  while (true) {
    bool ok = true;
    std::set<VertexId> used;
    int edges = 0;
    for (std::size_t i = 0; i < t.size() && ok; ++i) {
      if (!ordered && i > 0 && t[i - 1] >= t[i]) ok = false;
      for (VertexId v : closure(t[i])) ok = ok && used.insert(v).second;
      edges += t[i] >= V;
    }
    if (ok) out[static_cast<std::size_t>(edges)].insert(t);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == N) t[i++] = 0;
    if (i == t.size()) break;
  }
  while (out.size() > 1 && out.back().empty()) out.pop_back();
  return out;
}

std::vector<std::size_t> counts(const CubeComplex& c) {
  std::vector<std::size_t> out;
  for (int p = 0; p <= c.top_dimension(); ++p) out.push_back(c.cell_count(p));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::size_t> trimmed_betti(const CubeComplex& c) {
  auto b = betti(c).betti;
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  return b;
}

}  // namespace

TEST_CASE("two particles on Y") {
  const CubeComplex ud(sample("Y"), 2, false);
  CHECK(counts(ud) == std::vector<std::size_t>{6, 6});
  CHECK(trimmed_betti(ud) == std::vector<std::size_t>{1, 1});
  const CubeComplex d(sample("Y"), 2, true);
  CHECK(counts(d) == std::vector<std::size_t>{12, 12});
  CHECK(trimmed_betti(d) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("two particles on the five-cycle") {
  const CubeComplex c(sample("C5"), 2, false);
  CHECK(counts(c) == std::vector<std::size_t>{10, 15, 5});
  CHECK(trimmed_betti(c) == std::vector<std::size_t>{1, 1});
  CHECK(c.euler_characteristic() == 0);
}

TEST_CASE("one particle recovers the graph") {
  for (const char* name : {"Y", "H", "theta", "K4", "C5", "K33"}) {
    const Graph g = sample(name);
    const CubeComplex c(g, 1, false);
    CHECK(counts(c) == std::vector<std::size_t>{g.vertex_count(), g.edge_count()});
    const auto b = betti(c).betti;
    CHECK(b[0] == 1);
    CHECK(static_cast<long>(b[1]) == g.first_betti_number());
  }
}

TEST_CASE("cells match brute-force enumeration") {
  const std::vector<std::pair<Graph, int>> cases = {
      {sample("Y"), 2},
      {abrams_subdivide(sample("Y"), 3), 3},
      {sample("C5"), 3},
      {abrams_subdivide(sample("theta"), 2), 2},
      {abrams_subdivide(sample("H"), 2), 2},
  };
  for (const auto& [g, k] : cases)
    for (bool ordered : {false, true}) {
      CubeBuildOptions opts;
      opts.check_subdivision = false;
      const CubeComplex c(g, k, ordered, opts);
      const auto oracle = brute_force_cells(g, k, ordered);
      REQUIRE(static_cast<int>(oracle.size()) - 1 <= c.top_dimension());
      for (int p = 0; p <= c.top_dimension(); ++p) {
        std::set<std::vector<std::uint32_t>> got;
        for (std::size_t i = 0; i < c.cell_count(p); ++i) {
          const auto cell = c.cell(p, i);
          got.insert(std::vector<std::uint32_t>(cell.begin(), cell.end()));
        }
        const auto expected = p < static_cast<int>(oracle.size()) ? oracle[static_cast<std::size_t>(p)]
                                                                  : std::set<std::vector<std::uint32_t>>{};
        CHECK(got == expected);
      }
    }
}

TEST_CASE("boundary squares to zero and Betti numbers sum to the Euler characteristic") {
  const std::vector<std::pair<std::string, int>> cases = {{"Y", 2}, {"Y", 3}, {"C5", 2}, {"theta", 2},
                                                          {"H", 2}, {"H", 3}, {"K4", 2}, {"theta", 3}};
  for (const auto& [name, k] : cases)
    for (bool ordered : {false, true}) {
      if (ordered && k == 3 && name == "H") continue;
      const CubeComplex c(abrams_subdivide(sample(name), k), k, ordered);
      CHECK(boundary_squared_zero(c));
      const BettiVector b = betti(c);
      CHECK(b.alternating_sum() == c.euler_characteristic());
      CHECK(b.betti[0] == 1);
    }
}

TEST_CASE("Betti numbers are invariant under further subdivision") {
  for (const char* name : {"Y", "theta", "H", "K4"}) {
    const Graph g = sample(name);
    const auto coarse = trimmed_betti(CubeComplex(abrams_subdivide(g, 2), 2, false));
    const auto fine = trimmed_betti(CubeComplex(abrams_subdivide(g, 4), 2, false));
    CHECK(coarse == fine);
  }
}

TEST_CASE("unordered Betti numbers never exceed ordered ones") {
  for (const char* name : {"Y", "theta", "H", "C5"}) {
    const Graph g = abrams_subdivide(sample(name), 3);
    const auto u = betti(CubeComplex(g, 3, false)).betti;
    const auto o = betti(CubeComplex(g, 3, true)).betti;
    for (std::size_t d = 0; d < u.size(); ++d) CHECK(u[d] <= o[d]);
  }
}

TEST_CASE("truncation and the mod-p preview") {
  const Graph g = abrams_subdivide(sample("H"), 4);
  CubeBuildOptions opts;
  opts.max_dim = 3;
  const CubeComplex c(g, 4, false, opts);
  CHECK(c.truncated());
  const BettiVector b = betti(c);
  CHECK(b.betti.size() == 3);
  CHECK(b.betti[2] > 0);
  const auto preview = betti_mod_p(c);
  CHECK(preview.size() == 3);
  for (std::size_t d = 0; d < 3; ++d) CHECK(preview[d] >= b.betti[d]);
}

TEST_CASE("guards and errors") {
  CHECK_THROWS_AS(CubeComplex(sample("H"), 4, false), Error);
  CubeBuildOptions opts;
  opts.cell_cap = 10;
  CHECK_THROWS_AS(CubeComplex(abrams_subdivide(sample("H"), 4), 4, false, opts), ResourceError);
  CHECK_THROWS_AS(CubeComplex(sample("Y"), 0, false), Error);
  CHECK_THROWS_AS(certify_nonvanishing(sample("H"), 3), Error);
  CHECK_THROWS_AS(certify_nonvanishing(sample("H"), 1), Error);
}

TEST_CASE("cell cap from the environment") {
  ::setenv("GBT_CELL_CAP", "1234", 1);
  CHECK(cell_cap_from_env() == 1234);
  ::setenv("GBT_CELL_CAP", "abc", 1);
  CHECK_THROWS_AS(cell_cap_from_env(), Error);
  ::unsetenv("GBT_CELL_CAP");
  CHECK(cell_cap_from_env() == kDefaultCellCap);
}

TEST_CASE("nonvanishing certificate on H") {
  const auto cert = certify_nonvanishing(sample("H"), 2);
  CHECK(cert.k == 4);
  CHECK(cert.nonvanishing);
  CHECK(cert.betti_d > 0);
  CHECK(cert.cell_counts.size() == 4);
}

TEST_CASE("chain complex export") {
  const CubeComplex c(sample("Y"), 2, false);
  std::ostringstream out;
  write_chain_complex(out, c);
  const std::string text = out.str();
  CHECK(text.find("dimension 0 cells 6") != std::string::npos);
  CHECK(text.find("boundary 1 rows 6 cols 6 nonzeros 12") != std::string::npos);
  CHECK(c.cell_name(0, 0) == "{c, a1}");
}
