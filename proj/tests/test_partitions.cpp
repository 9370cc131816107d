#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "gbt/error.hpp"
#include "gbt/partitions.hpp"

using namespace gbt;

namespace {

// Every assignment obtained from a permutation of 1..k, deduplicated.
std::set<std::vector<IndexPair>> brute_force_partitions(int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::vector<IndexPair>> out;
  do {
    std::vector<IndexPair> blocks;
    for (std::size_t i = 0; i < perm.size(); i += 2)
      blocks.push_back({std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1])});
    out.insert(blocks);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::string> names(int d) {
  std::vector<std::string> W;
  for (int i = 0; i < d; ++i) W.push_back("v" + std::to_string(i));
  return W;
}

}  // namespace

TEST_CASE("enumeration count and content match brute force") {
  for (int d = 1; d <= 4; ++d) {
    const auto parts = enumerate_partitions(2 * d, names(d));
    const auto oracle = brute_force_partitions(2 * d);
    CHECK(parts.size() == oracle.size());
    std::set<std::vector<IndexPair>> seen;
    for (const auto& p : parts) {
      std::vector<IndexPair> blocks;
      for (const auto& b : p.blocks()) blocks.push_back(b.pair);
      seen.insert(blocks);
    }
    CHECK(seen == oracle);
  }
  CHECK(enumerate_partitions(4, names(2)).size() == 6);
  CHECK(enumerate_partitions(6, names(3)).size() == 90);
}

TEST_CASE("enumeration order for two vertices") {
  const auto parts = enumerate_partitions(4, {"u", "w"});
  std::vector<std::string> text;
  for (const auto& p : parts) text.push_back(p.to_string());
  CHECK(text == std::vector<std::string>{"u:{1,2} w:{3,4}", "u:{1,3} w:{2,4}", "u:{1,4} w:{2,3}",
                                         "u:{2,3} w:{1,4}", "u:{2,4} w:{1,3}", "u:{3,4} w:{1,2}"});
}

TEST_CASE("parsing and validation") {
  const auto p = parse_partition("u:{2,1}  w:{3,4}");
  CHECK(p.k() == 4);
  CHECK(p.at("u") == IndexPair{1, 2});
  CHECK(p.to_string() == "u:{1,2} w:{3,4}");
  CHECK(parse_partition("w:{3,4} u:{1,2}") == p);
  CHECK_THROWS_AS(parse_partition("u:{1,2} w:{2,3}"), Error);
  CHECK_THROWS_AS(parse_partition("u:{1,1} w:{3,4}"), Error);
  CHECK_THROWS_AS(parse_partition("u:{1,2} u:{3,4}"), Error);
  CHECK_THROWS_AS(parse_partition("u:{1,5} w:{3,4}"), Error);
  CHECK_THROWS_AS(parse_partition("u:1,2"), Error);
  CHECK_THROWS_AS(p.at("x"), Error);
}

TEST_CASE("disjointness and overlap") {
  const auto a = parse_partition("u:{1,2} w:{3,4}");
  const auto b = parse_partition("u:{2,3} w:{1,4}");
  const auto c = parse_partition("u:{3,4} w:{1,2}");
  CHECK(disjoint(a, b));
  CHECK_FALSE(disjoint(a, c));
  CHECK_FALSE(disjoint(a, a));
  CHECK(overlap(a, b, "u", "u") == 1);
  CHECK(overlap(a, c, "u", "u") == 0);
  CHECK(overlap(a, c, "u", "w") == 2);
}

TEST_CASE("witness pair is disjoint for every d >= 2") {
  for (int d = 2; d <= 8; ++d) {
    const auto w = witness_disjoint_pair(2 * d, names(d));
    REQUIRE(w.has_value());
    CHECK(disjoint(w->first, w->second));
    CHECK(w->second.blocks().back().pair == IndexPair{1, 2 * d});
  }
  CHECK_FALSE(witness_disjoint_pair(2, names(1)).has_value());
}
