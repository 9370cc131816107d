#include "gbt/verifier.hpp"

#include <algorithm>

#include "gbt/error.hpp"

namespace gbt {

std::string case_label(EntryCase c) {
  switch (c) {
    case EntryCase::DifferentVertex: return "v≠w";
    case EntryCase::EqualPair: return "λ=μ";
    case EntryCase::Overlap1: return "overlap1";
    case EntryCase::Disjoint: return "disjoint";
  }
  return "?";
}

bool VerificationReport::violation() const {
  return !lemma_cases || (prop1_injective && !*prop1_injective) ||
         (prop2_trivial && !*prop2_trivial);
}

namespace {

EntryCase classify(const BinaryWPartition& lambda, const BinaryWPartition& mu, const std::string& v,
                   const std::string& w) {
  if (v != w) return EntryCase::DifferentVertex;
  switch (overlap(lambda, mu, v, w)) {
    case 2: return EntryCase::EqualPair;
    case 1: return EntryCase::Overlap1;
    default: return EntryCase::Disjoint;
  }
}

std::string explain_entry(const ComponentEntry& e) {
  const std::string at = "(" + e.generator_vertex + "," + e.detection_vertex + ") ";
  switch (e.entry_case) {
    case EntryCase::DifferentVertex:
      return at + "v≠w: the star at " + e.generator_vertex + " misses the open star at " +
             e.detection_vertex + ", image constant at the base point";
    case EntryCase::EqualPair:
      return at + "λ=μ: both exchanging particles tracked, image " +
             free_generator_decomposition(e.word).to_string();
    case EntryCase::Overlap1:
      return at + "overlap1: one tracked particle runs g12 g23 g31, which reduces to 1";
    case EntryCase::Disjoint:
      return at + "disjoint: no tracked particle moves, image constant at the base point";
  }
  return at;
}

VerificationReport assemble(const Graph& g, const BinaryWPartition& lambda, const BinaryWPartition& mu,
                            const std::vector<LoopSpec>& loops, bool literal_empty,
                            std::string graph_id) {
  auto va = lambda.vertices();
  auto vb = mu.vertices();
  if (lambda.k() != mu.k() || std::is_permutation(va.begin(), va.end(), vb.begin(), vb.end()) == false)
    throw Error("verify: partitions over different k or W");

  VerificationReport report;
  report.graph_id = std::move(graph_id);
  report.W = va;
  report.lambda = lambda;
  report.mu = mu;

  for (std::size_t i = 0; i < report.W.size(); ++i) {
    for (const std::string& w : report.W) {
      ComponentEntry e;
      e.generator_vertex = report.W[i];
      e.detection_vertex = w;
      e.entry_case = classify(lambda, mu, e.generator_vertex, w);
      const IndexPair& tracked = mu.at(w);
      e.word = q_project(g, loops[i], {tracked[0], tracked[1]}, g.vertex(w));
      e.trivial = is_trivial(e.word);
      if (e.entry_case == EntryCase::EqualPair)
        e.matches_expectation = !e.trivial;
      else if (e.entry_case == EntryCase::DifferentVertex && literal_empty)
        e.matches_expectation = e.word.empty();
      else
        e.matches_expectation = e.trivial;
      report.lemma_cases = report.lemma_cases && e.matches_expectation;
      report.entries.push_back(std::move(e));
    }
  }

  report.certificate.push_back(
      "generator images are q-projections of the exchange loops; basepoint changes are omitted "
      "because triviality and infinite order are conjugation invariant");
  if (lambda == mu) {
    bool ok = true;
    for (const auto& e : report.entries) {
      const bool diagonal = e.generator_vertex == e.detection_vertex;
      ok = ok && (diagonal ? !e.trivial : e.trivial);
    }
    report.prop1_injective = ok;
    report.certificate.push_back(
        "injective: each generator lands in its own free factor with nontrivial image; free "
        "groups are torsion-free, so each image has infinite order and Z^W embeds");
  }
  if (disjoint(lambda, mu)) {
    bool ok = true;
    for (const auto& e : report.entries) ok = ok && e.trivial;
    report.prop2_trivial = ok;
    report.certificate.push_back("trivial: every generator image is the identity in every factor");
  }
  for (const auto& e : report.entries) report.certificate.push_back(explain_entry(e));
  return report;
}

}  // namespace

ThetaWord component_word(const Graph& g, const BinaryWPartition& lambda, const BinaryWPartition& mu,
                         std::string_view v, std::string_view w) {
  const PhiLambda phi = build_phi_lambda(g, lambda);
  const IndexPair& tracked = mu.at(w);
  return q_project(g, phi.loop(v), {tracked[0], tracked[1]}, g.vertex(w));
}

VerificationReport verify_proposition(const Graph& g, const BinaryWPartition& lambda,
                                      const BinaryWPartition& mu, std::string graph_id) {
  const PhiLambda phi = build_phi_lambda(g, lambda);
  std::vector<LoopSpec> loops;
  for (const auto& [v, loop] : phi.loops) loops.push_back(loop);
  return assemble(g, lambda, mu, loops, true, std::move(graph_id));
}

VerificationReport verify_proposition_conjugated(const Graph& g, const BinaryWPartition& lambda,
                                                 const BinaryWPartition& mu,
                                                 const DiscreteConfiguration& start,
                                                 const std::vector<Move>& path,
                                                 std::string graph_id) {
  const PhiLambda phi = build_phi_lambda(g, lambda);
  std::vector<LoopSpec> loops;
  for (const auto& [v, loop] : phi.loops) {
    LoopSpec c = conjugate(loop, start, path);
    validate(g, c);
    loops.push_back(std::move(c));
  }
  return assemble(g, lambda, mu, loops, false, std::move(graph_id));
}

VerificationSummary verify_all(const Graph& g, const std::vector<std::string>& W,
                               std::size_t max_vertices, std::string graph_id) {
  if (W.size() > max_vertices)
    throw ResourceError("verify_all: |W| = " + std::to_string(W.size()) + " exceeds the limit " +
                        std::to_string(max_vertices));
  const int k = 2 * static_cast<int>(W.size());
  const auto partitions = enumerate_partitions(k, W);

  VerificationSummary summary;
  summary.graph_id = graph_id;
  summary.W = W;
  for (const auto& lambda : partitions) {
    for (const auto& mu : partitions) {
      VerificationReport r = verify_proposition(g, lambda, mu, graph_id);
      ++summary.pairs;
      if (r.prop1_injective) {
        ++summary.equal_pairs;
        if (*r.prop1_injective) ++summary.injective_certified;
      } else if (r.prop2_trivial) {
        ++summary.disjoint_pairs;
        if (*r.prop2_trivial) ++summary.trivial_certified;
      } else {
        ++summary.mixed_pairs;
      }
      if (r.violation()) {
        ++summary.violations;
        summary.violating_reports.push_back(std::move(r));
      }
    }
  }
  return summary;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["graph"] = report.graph_id;
  out["W"] = report.W;
  out["lambda"] = report.lambda.to_string();
  out["mu"] = report.mu.to_string();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json j;
    j["v"] = e.generator_vertex;
    j["w"] = e.detection_vertex;
    j["case"] = case_label(e.entry_case);
    j["word"] = e.word.to_string();
    j["basis_word"] = free_generator_decomposition(e.word).to_string();
    j["trivial"] = e.trivial;
    j["matches"] = e.matches_expectation;
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  nlohmann::ordered_json verdicts;
  verdicts["prop1_injective"] =
      report.prop1_injective ? nlohmann::ordered_json(*report.prop1_injective) : nlohmann::ordered_json();
  verdicts["prop2_trivial"] =
      report.prop2_trivial ? nlohmann::ordered_json(*report.prop2_trivial) : nlohmann::ordered_json();
  verdicts["lemma_cases"] = report.lemma_cases;
  out["verdicts"] = std::move(verdicts);
  out["certificate"] = report.certificate;
  return out;
}

nlohmann::ordered_json to_json(const VerificationSummary& summary) {
  nlohmann::ordered_json out;
  out["graph"] = summary.graph_id;
  out["W"] = summary.W;
  out["pairs"] = summary.pairs;
  out["equal_pairs"] = summary.equal_pairs;
  out["disjoint_pairs"] = summary.disjoint_pairs;
  out["mixed_pairs"] = summary.mixed_pairs;
  out["injective_certified"] = summary.injective_certified;
  out["trivial_certified"] = summary.trivial_certified;
  out["violations"] = summary.violations;
  auto bad = nlohmann::ordered_json::array();
  for (const auto& r : summary.violating_reports) bad.push_back(to_json(r));
  out["violating_reports"] = std::move(bad);
  return out;
}

}  // namespace gbt
