#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbt/cube_complex.hpp"
#include "gbt/graph.hpp"
#include "gbt/verifier.hpp"
#include "json.hpp"

namespace gbt {

struct TCQuery {
  Graph graph;
  int k = 1;  // particles
  int r = 2;  // sequence length of TC_r
};

struct EvaluateOptions {
  bool certify = false;
  std::size_t cell_cap = kDefaultCellCap;
};

/// Evidence for the lower bound at k' = 2d: the witness partitions lambda,
/// mu satisfy T_lambda in ker(delta_mu) and T_mu meeting ker(delta_mu)
/// trivially, and H_d of the configuration space is nonzero.
struct TCCertificates {
  int d = 0;
  int k_used = 0;
  std::vector<std::string> W;
  VerificationReport disjoint_report;   // (lambda, mu): must be trivial
  VerificationReport injective_report;  // (mu, mu): must be injective
  NonvanishingCertificate homology;
  std::vector<std::string> notes;

  bool certified() const;
};

enum class TCStatus { Exact, Bounded };

struct TCResult {
  TCStatus status = TCStatus::Bounded;
  long lower = 0;
  long upper = 0;
  int m = 0;
  int k = 0;
  int r = 0;
  std::vector<std::string> provenance;
  std::optional<TCCertificates> certificates;

  long value() const { return lower; }
};

/// Exact TC_r(Conf_k) where m >= 2 and k >= 2m, otherwise the best bounds
/// available from the lower bound r*min(floor(k/2), m) (k >= 4) and the
/// dimension bound r*m. Throws gbt::Error for r < 1, k < 1 or a
/// disconnected graph; certification may throw gbt::ResourceError.
TCResult evaluate(const TCQuery& q, const EvaluateOptions& options = {});

/// Human-readable derivation, one rule per line.
std::string explain(const TCResult& result);

nlohmann::ordered_json to_json(const TCResult& result);

}  // namespace gbt
