#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  for (auto& a : args)
    if (a.ends_with(".json") && a.find('/') == std::string::npos) a = std::string(GBT_DATA_DIR) + "/" + a;
  const int code = gbt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze") {
  const auto r = run({"analyze", "H.json"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  const auto j = r.json();
  CHECK(j["m"] == 2);
  CHECK(j["essential_vertices"] == nlohmann::json::array({"u", "w"}));
  CHECK(j["valences"]["a"] == 1);
  CHECK(j["first_betti"] == 0);
}

TEST_CASE("subdivide") {
  const auto p = run({"subdivide", "theta.json", "--paper"});
  REQUIRE(p.code == 0);
  CHECK(p.json()["edges"].size() == 9);
  const auto a = run({"subdivide", "Y.json", "--abrams", "2"});
  CHECK(a.json()["edges"].size() == 9);
  CHECK(run({"subdivide", "Y.json"}).code == 1);
  CHECK(run({"subdivide", "Y.json", "--paper", "--abrams", "2"}).code == 1);
}

TEST_CASE("epsilon") {
  const auto r = run({"epsilon", "Y.json", "--vertex", "c", "--pair", "1,2"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["moves"].size() == 12);
  CHECK(j["projection"]["word"] == "g23 g12 g31 g23 g12 g31");
  CHECK(j["projection"]["basis_word"] == "g23 g12 g23^-1 g12^-1 g23 g12 g23^-1 g12^-1");
  CHECK(j["projection"]["trivial"] == false);
  const auto shared = run({"epsilon", "H.json", "--vertex", "u", "--pair", "1,2", "--k", "3", "--track", "1,3"});
  REQUIRE(shared.code == 0);
  CHECK(shared.json()["projection"]["trivial"] == true);
  CHECK(run({"epsilon", "Y.json", "--vertex", "a1", "--pair", "1,2"}).code == 1);
  CHECK(run({"epsilon", "Y.json", "--vertex", "c", "--pair", "12"}).code == 1);
}

TEST_CASE("verify") {
  const auto all = run({"verify", "H.json", "--k", "4", "--all-pairs"});
  REQUIRE(all.code == 0);
  CHECK(all.json()["pairs"] == 36);
  CHECK(all.json()["violations"] == 0);
  const auto one = run({"verify", "theta.json", "--k", "4", "--lambda", "u:{1,2} w:{3,4}", "--mu",
                        "u:{2,3} w:{1,4}"});
  REQUIRE(one.code == 0);
  CHECK(one.json()["entries"][0]["case"] == "overlap1");
  const auto witness = run({"verify", "H.json", "--k", "4"});
  CHECK(witness.code == 0);
  CHECK(run({"verify", "H.json", "--k", "6"}).code == 1);
  CHECK(run({"verify", "H.json", "--k", "4", "--all-pairs", "--lambda", "u:{1,2} w:{3,4}"}).code == 1);
}

TEST_CASE("homology") {
  const auto r = run({"homology", "Y.json", "--k", "2", "--unordered"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["cells"][0] == 6);
  CHECK(j["cells"][1] == 6);
  CHECK(j["betti"][0] == 1);
  CHECK(j["betti"][1] == 1);
  CHECK(run({"homology", "Y.json", "--k", "2"}).code == 1);
  CHECK(run({"homology", "H.json", "--k", "4", "--unordered"}).code == 1);

  const std::string path = "cli_export_test.txt";
  const auto e = run({"homology", "C5.json", "--k", "2", "--ordered", "--export", path, "--mod-p", "3"});
  REQUIRE(e.code == 0);
  CHECK(e.json()["mod_p_preview"]["certifying"] == false);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first.starts_with("# chain complex"));
  std::remove(path.c_str());
}

TEST_CASE("resource guard exits with 2") {
  ::setenv("GBT_CELL_CAP", "50", 1);
  const auto r = run({"homology", "H.json", "--k", "4", "--unordered", "--subdivide"});
  ::unsetenv("GBT_CELL_CAP");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("tc") {
  const auto r = run({"tc", "H.json", "--k", "4", "--r", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["status"] == "exact");
  CHECK(r.json()["value"] == 4);
  const auto c = run({"tc", "H.json", "--k", "4", "--r", "2", "--certify", "--explain"});
  REQUIRE(c.code == 0);
  CHECK(c.json()["certificates"]["certified"] == true);
  CHECK(c.json().contains("explanation"));
  CHECK(run({"tc", "H.json", "--k", "4", "--r", "0"}).code == 1);
}

TEST_CASE("usage errors and formatting") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate", "H.json"}).code == 1);
  CHECK(run({"analyze", "H.json", "--bogus"}).code == 1);
  CHECK(run({"analyze", "missing.json"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const auto pretty = run({"analyze", "H.json", "--pretty"});
  CHECK(pretty.out.find("\n  \"") != std::string::npos);
  // Deterministic output.
  CHECK(run({"verify", "H.json", "--k", "4", "--all-pairs"}).out ==
        run({"verify", "H.json", "--k", "4", "--all-pairs"}).out);
}

TEST_CASE("parse errors report a position") {
  const std::string path = "cli_bad_graph.json";
  {
    std::ofstream f(path);
    f << "{\n  \"vertices\": [\"u\"\n";
  }
  const auto r = run({"analyze", "./" + path});
  std::remove(path.c_str());
  CHECK(r.code == 1);
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(r.err.find("column") != std::string::npos);
}
