#include "doctest.h"
#include "gbt/error.hpp"
#include "gbt/tc.hpp"
#include "support.hpp"

using namespace gbt;
using gbt::test::sample;

TEST_CASE("published values") {
  const TCResult h2 = evaluate({sample("H"), 4, 2});
  CHECK(h2.status == TCStatus::Exact);
  CHECK(h2.value() == 4);
  CHECK(evaluate({sample("K4"), 8, 3}).value() == 12);
  const TCResult h1 = evaluate({sample("H"), 4, 1});
  CHECK(h1.value() == 2);
  const TCResult k4 = evaluate({sample("K4"), 4, 2});
  CHECK(k4.status == TCStatus::Bounded);
  CHECK(k4.lower == 4);
  CHECK(k4.upper == 8);
}

TEST_CASE("rule table across parameters") {
  for (const char* name : {"Y", "H", "theta", "K4", "K5", "K33", "C5"}) {
    const Graph g = sample(name);
    const long m = static_cast<long>(essential_count(g));
    for (int k = 1; k <= 14; ++k)
      for (int r = 1; r <= 4; ++r) {
        const TCResult res = evaluate({g, k, r});
        CHECK(res.lower <= res.upper);
        CHECK(res.upper <= r * std::max(m, 1L));
        CHECK((res.status == TCStatus::Exact) == (m >= 2 && k >= 2 * m));
        if (m >= 2 && k >= 4) CHECK(res.lower == r * std::min<long>(k / 2, m));
        if (res.status == TCStatus::Exact) CHECK(res.value() == r * m);
        // Non-decreasing in k.
        if (k > 1) CHECK(evaluate({g, k - 1, r}).lower <= res.lower);
      }
  }
}

TEST_CASE("low range bounds") {
  const TCResult y = evaluate({sample("Y"), 2, 2});
  CHECK(y.status == TCStatus::Bounded);
  CHECK(y.lower == 0);
  CHECK(y.upper == 2);
  const TCResult c = evaluate({sample("C5"), 3, 3});
  CHECK(c.upper == 3);
  const TCResult h = evaluate({sample("H"), 3, 2});
  CHECK(h.status == TCStatus::Bounded);
  CHECK(h.lower == 0);
  CHECK(h.upper == 4);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(evaluate({sample("H"), 4, 0}), Error);
  CHECK_THROWS_AS(evaluate({sample("H"), 0, 2}), Error);
  const Graph split({"a", "b"}, {});
  CHECK_THROWS_AS(evaluate({split, 4, 2}), Error);
}

TEST_CASE("certificates") {
  EvaluateOptions opts;
  opts.certify = true;
  const TCResult h = evaluate({sample("H"), 4, 2}, opts);
  REQUIRE(h.certificates.has_value());
  CHECK(h.certificates->certified());
  CHECK(h.certificates->d == 2);
  CHECK(h.certificates->W == std::vector<std::string>{"u", "w"});

  const TCResult odd = evaluate({sample("theta"), 5, 2}, opts);
  REQUIRE(odd.certificates.has_value());
  CHECK(odd.certificates->k_used == 4);
  CHECK_FALSE(odd.certificates->notes.empty());
  CHECK(odd.certificates->certified());

  CHECK_FALSE(evaluate({sample("Y"), 4, 2}, opts).certificates.has_value());
}

TEST_CASE("serialization and explanation") {
  const auto j = to_json(evaluate({sample("H"), 4, 2}));
  CHECK(j["status"] == "exact");
  CHECK(j["value"] == 4);
  CHECK(j.begin().key() == "status");
  const auto b = to_json(evaluate({sample("K4"), 4, 2}));
  CHECK(b["lower"] == 4);
  CHECK(b["upper"] == 8);
  CHECK(b.find("value") == b.end());
  const std::string text = explain(evaluate({sample("H"), 4, 2}));
  CHECK(text.find("TC_2 = 4") != std::string::npos);
}
