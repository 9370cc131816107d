#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gbt/config_moves.hpp"
#include "gbt/graph.hpp"
#include "gbt/partitions.hpp"
#include "gbt/theta_word.hpp"
#include "json.hpp"

namespace gbt {

/// Case of the (v, w) entry of the detection-after-toric matrix.
enum class EntryCase {
  DifferentVertex,  // v != w
  EqualPair,        // v == w, lambda(v) == mu(v)
  Overlap1,         // v == w, |lambda(v) & mu(v)| == 1
  Disjoint,         // v == w, lambda(v) and mu(v) disjoint
};

/// "v≠w", "λ=μ", "overlap1", "disjoint".
std::string case_label(EntryCase c);

struct ComponentEntry {
  std::string generator_vertex;  // v: the Z factor
  std::string detection_vertex;  // w: the theta factor
  EntryCase entry_case = EntryCase::DifferentVertex;
  ThetaWord word;                // up to conjugacy
  bool trivial = true;
  bool matches_expectation = true;
};

/// delta_mu(tau_lambda(e_v)) for every generator v, as theta words per
/// detection vertex w. The subgroups are never materialised; every verdict
/// is certified through generator images only.
struct VerificationReport {
  std::string graph_id;
  std::vector<std::string> W;
  BinaryWPartition lambda;
  BinaryWPartition mu;
  std::vector<ComponentEntry> entries;  // row-major over (v, w) in W order
  std::optional<bool> prop1_injective;  // present when lambda == mu
  std::optional<bool> prop2_trivial;    // present when lambda, mu disjoint
  bool lemma_cases = true;
  std::vector<std::string> certificate;

  const ComponentEntry& entry(std::size_t v, std::size_t w) const { return entries.at(v * W.size() + w); }
  bool violation() const;
};

/// q-image at w, tracked on mu(w), of the exchange loop at v of the product
/// loop of lambda. Basepoint changes are dropped, so the word is meaningful
/// up to conjugacy.
ThetaWord component_word(const Graph& g, const BinaryWPartition& lambda, const BinaryWPartition& mu,
                         std::string_view v, std::string_view w);

VerificationReport verify_proposition(const Graph& g, const BinaryWPartition& lambda,
                                      const BinaryWPartition& mu, std::string graph_id = "graph");

/// Same checks with every loop conjugated by `path` from `start` to the
/// product-loop base.
VerificationReport verify_proposition_conjugated(const Graph& g, const BinaryWPartition& lambda,
                                                 const BinaryWPartition& mu,
                                                 const DiscreteConfiguration& start,
                                                 const std::vector<Move>& path,
                                                 std::string graph_id = "graph");

struct VerificationSummary {
  std::string graph_id;
  std::vector<std::string> W;
  std::size_t pairs = 0;
  std::size_t equal_pairs = 0;
  std::size_t disjoint_pairs = 0;
  std::size_t mixed_pairs = 0;
  std::size_t injective_certified = 0;
  std::size_t trivial_certified = 0;
  std::size_t violations = 0;
  std::vector<VerificationReport> violating_reports;
};

/// verify_proposition over all ordered pairs of binary W-partitions of
/// {1..2|W|}. Throws gbt::ResourceError when |W| exceeds `max_vertices`.
VerificationSummary verify_all(const Graph& g, const std::vector<std::string>& W,
                               std::size_t max_vertices = 4, std::string graph_id = "graph");

nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const VerificationSummary& summary);

}  // namespace gbt
