#include <queue>
#include <random>

#include "doctest.h"
#include "gbt/error.hpp"
#include "support.hpp"

using namespace gbt;
using gbt::test::sample;

namespace {

// Plain BFS distances, used as an oracle for the subdivision checks.
std::vector<std::size_t> distances_from(const Graph& g, VertexId s) {
  std::vector<std::size_t> d(g.vertex_count(), SIZE_MAX);
  std::queue<VertexId> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId w : g.neighbours(v))
      if (d[w] == SIZE_MAX) {
        d[w] = d[v] + 1;
        q.push(w);
      }
  }
  return d;
}

Graph random_connected_multigraph(std::mt19937& rng, int n, int extra) {
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> es;
  int id = 0;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    es.push_back({"e" + std::to_string(id++), vs[static_cast<std::size_t>(pick(rng))], vs[static_cast<std::size_t>(i)]});
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int i = 0; i < extra; ++i)
    es.push_back({"e" + std::to_string(id++), vs[static_cast<std::size_t>(any(rng))],
                  vs[static_cast<std::size_t>(any(rng))]});
  return Graph(vs, es);
}

}  // namespace

TEST_CASE("valences and essential vertices of the samples") {
  const Graph h = sample("H");
  CHECK(essential_vertex_names(h) == std::vector<std::string>{"u", "w"});
  CHECK(valence(h, "u") == 3);
  CHECK(valence(h, "a") == 1);
  CHECK(h.first_betti_number() == 0);

  const Graph k4 = sample("K4");
  CHECK(essential_count(k4) == 4);
  CHECK(k4.first_betti_number() == 3);
  CHECK(essential_count(sample("C5")) == 0);
  CHECK(essential_count(sample("theta")) == 2);
  CHECK(sample("theta").first_betti_number() == 2);
}

TEST_CASE("loops count twice toward valence") {
  const Graph g({"v", "x"}, {{"l", "v", "v"}, {"e", "v", "x"}});
  CHECK(g.valence(g.vertex("v")) == 3);
  CHECK(is_essential(g, g.vertex("v")));
  CHECK(g.first_betti_number() == 1);
  CHECK(girth(g) == 1u);
}

TEST_CASE("half-edge ordering follows edge_order") {
  const Graph g({"u", "w"}, {{"a", "u", "w"}, {"b", "u", "w"}, {"c", "u", "w"}},
                {{"u", {"c", "a", "b"}}});
  const auto hs = g.half_edges(g.vertex("u"));
  REQUIRE(hs.size() == 3);
  CHECK(g.edge(hs[0].edge).id == "c");
  CHECK(g.half_edge_position(hs[2]) == 3);
  CHECK(g.edge(g.half_edges(g.vertex("w"))[0].edge).id == "a");
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(Graph({"u", "u"}, {}), Error);
  CHECK_THROWS_AS(Graph({"u"}, {{"e", "u", "x"}}), Error);
  CHECK_THROWS_AS(Graph({"u", "w"}, {{"e", "u", "w"}, {"e", "u", "w"}}), Error);
  CHECK_THROWS_AS(Graph({"u", "w"}, {{"e", "u", "w"}, {"f", "u", "w"}}, {{"u", {"e"}}}), Error);
}

TEST_CASE("JSON round trip and diagnostics") {
  const Graph h = sample("H");
  CHECK(parse_graph_json(format_graph_json(h)) == h);
  const std::string text = format_graph_json(h);
  CHECK(text.find("\"vertices\"") < text.find("\"edges\""));
  CHECK(text.find("\"edges\"") < text.find("\"edge_order\""));

  const Graph reordered = parse_graph_json(
      R"({"edges":[{"ends":["u","w"],"id":"e"}],"vertices":["u","w"],"comment":1})");
  CHECK(reordered.edge_count() == 1);

  try {
    parse_graph_json("{\n  \"vertices\": [\"u\",\n  ]\n}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices":["u"],"edges":[{"id":"e","ends":["u"]}]})"), Error);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.json"), Error);
}

TEST_CASE("paper subdivision of H and theta") {
  const Graph h = paper_subdivide(sample("H"));
  CHECK(h.vertex_count() == 8);
  CHECK(h.edge_count() == 7);
  CHECK(closed_stars_disjoint(h, "u", "w"));
  CHECK_FALSE(closed_stars_disjoint(sample("H"), "u", "w"));

  const Graph t = paper_subdivide(sample("theta"));
  CHECK(t.edge_count() == 9);
  CHECK(closed_stars_disjoint(t, "u", "w"));
  CHECK(t.find_vertex("e1.v2").has_value());
  CHECK(t.find_edge("e3.e3").has_value());
  CHECK_THROWS_AS(closed_stars_disjoint(t, "u", "u"), Error);
}

TEST_CASE("paper subdivision on random multigraphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_connected_multigraph(rng, 3 + trial % 6, trial % 7);
    const Graph s = paper_subdivide(g);
    CHECK(paper_subdivide(s) == s);
    CHECK(essential_count(s) == essential_count(g));
    CHECK(s.first_betti_number() == g.first_betti_number());
    const auto ess = essential_vertices(s);
    for (VertexId v : ess)
      for (const HalfEdge& h : s.half_edges(v)) CHECK_FALSE(s.edge(h.edge).is_loop());
    for (std::size_t i = 0; i < ess.size(); ++i) {
      const auto d = distances_from(s, ess[i]);
      for (std::size_t j = i + 1; j < ess.size(); ++j) {
        CHECK(d[ess[j]] >= 3);
        CHECK(closed_stars_disjoint(s, s.vertex_name(ess[i]), s.vertex_name(ess[j])));
      }
    }
  }
}

TEST_CASE("abrams subdivision meets the sufficiency condition") {
  for (const char* name : {"Y", "H", "theta", "K4", "C5"}) {
    const Graph g = sample(name);
    for (int k = 1; k <= 4; ++k) {
      const Graph s = abrams_subdivide(g, k);
      CHECK(s.edge_count() == g.edge_count() * static_cast<std::size_t>(k + 1));
      CHECK(sufficiently_subdivided(s, k));
    }
  }
  CHECK_FALSE(sufficiently_subdivided(sample("C5"), 5));
  CHECK(sufficiently_subdivided(sample("C5"), 4));
  CHECK_FALSE(sufficiently_subdivided(sample("H"), 4));
  CHECK_THROWS_AS(abrams_subdivide(sample("H"), 0), Error);
}

TEST_CASE("girth against brute force on small graphs") {
  CHECK(girth(sample("K4")) == 3u);
  CHECK(girth(sample("K33")) == 4u);
  CHECK(girth(sample("theta")) == 2u);
  CHECK_FALSE(girth(sample("H")).has_value());
  CHECK(girth(abrams_subdivide(sample("K4"), 2)) == 9u);
}

TEST_CASE("star embedding") {
  const Graph h = paper_subdivide(sample("H"));
  const StarEmbedding emb = star_embedding(h, "u");
  CHECK(h.vertex_name(emb.center) == "u");
  CHECK(h.vertex_name(emb.boundary[0]) == "a");
  CHECK(h.vertex_name(emb.boundary[1]) == "b");
  CHECK(h.vertex_name(emb.boundary[2]) == "uw.v1");
  CHECK_THROWS_AS(star_embedding(h, "a"), Error);
  CHECK_THROWS_AS(star_embedding(sample("theta"), "u"), Error);
}

TEST_CASE("disconnected graphs") {
  const Graph g({"a", "b", "c"}, {{"e", "a", "b"}});
  CHECK_FALSE(g.connected());
  CHECK(g.component_count() == 2);
  CHECK_THROWS_AS(paper_subdivide(g), Error);
}
