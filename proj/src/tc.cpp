#include "gbt/tc.hpp"

#include <algorithm>

#include "gbt/error.hpp"
#include "gbt/partitions.hpp"

namespace gbt {

namespace {

const char* kExactRule =
    "exact value: TC_r(Conf_k(G)) = r*m(G) for connected G with m(G) >= 2 and k >= 2m(G)";
const char* kLowerRule =
    "general lower bound: TC_r(Conf_k(G)) >= r*min(floor(k/2), m(G)) for k >= 4";
const char* kUpperRule =
    "dimension bound: TC_r <= r*hdim(Conf_k(G)) and hdim(Conf_k(G)) <= m(G) independent of k";
const char* kLowRangeRule =
    "m(G) <= 1 or k < 4: outside the range of the general lower bound, treated by other means; "
    "exact values are not computed";
const char* kCategoryRule =
    "r = 1: TC_1 is the Lusternik-Schnirelmann category, which equals cd(P_k(G)) by asphericity "
    "and Eilenberg-Ganea";
const char* kMonotoneRule = "monotonicity: TC_r(Conf_k(G)) is non-decreasing in k for fixed r";

TCCertificates certify(const Graph& g, int k, std::size_t cell_cap) {
  const int m = static_cast<int>(essential_count(g));
  TCCertificates cert;
  const int k_even = 2 * (k / 2);
  cert.d = std::min(k_even / 2, m);
  cert.k_used = 2 * cert.d;
  if (cert.k_used != k)
    cert.notes.push_back(std::string(kMonotoneRule) + "; certified at k' = " +
                         std::to_string(cert.k_used) + " and transported to k = " + std::to_string(k));

  const Graph local = paper_subdivide(g);
  const auto essential = essential_vertex_names(local);
  cert.W.assign(essential.begin(), essential.begin() + cert.d);
  auto witness = witness_disjoint_pair(cert.k_used, cert.W);
  if (!witness) throw Error("certification needs at least two essential vertices");
  const auto& [lambda, mu] = *witness;
  cert.disjoint_report = verify_proposition(local, lambda, mu, "certified graph");
  cert.injective_report = verify_proposition(local, mu, mu, "certified graph");
  cert.notes.push_back(
      "T_lambda lies in the normal subgroup ker(delta_mu), so every conjugate of T_lambda misses "
      "T_mu; the subgroup criterion for aspherical spaces then gives TC_r >= cd(Z^d x Z^d x "
      "P^(r-2)) >= 2d + (r-2)*cd_Q(P) with cd_Q(P) >= d from the homology certificate");
  cert.homology = certify_nonvanishing(g, cert.d, cell_cap);
  return cert;
}

}  // namespace

bool TCCertificates::certified() const {
  return disjoint_report.prop2_trivial.value_or(false) && !disjoint_report.violation() &&
         injective_report.prop1_injective.value_or(false) && !injective_report.violation() &&
         homology.nonvanishing;
}

TCResult evaluate(const TCQuery& q, const EvaluateOptions& options) {
  if (q.r < 1) throw Error("r must be at least 1");
  if (q.k < 1) throw Error("k must be at least 1");
  if (!q.graph.connected()) throw Error("graph is not connected");

  TCResult res;
  res.m = static_cast<int>(essential_count(q.graph));
  res.k = q.k;
  res.r = q.r;
  const long r = q.r;
  const long m = res.m;

  if (m >= 2 && q.k >= 2 * m) {
    res.status = TCStatus::Exact;
    res.lower = res.upper = r * m;
    res.provenance = {kExactRule, kLowerRule, kUpperRule};
  } else if (m >= 2 && q.k >= 4) {
    res.status = TCStatus::Bounded;
    res.lower = r * std::min<long>(q.k / 2, m);
    res.upper = r * m;
    res.provenance = {kLowerRule, kUpperRule};
  } else {
    res.status = TCStatus::Bounded;
    const long cycle_cap = q.graph.first_betti_number() > 0 ? 1 : 0;
    res.lower = 0;
    res.upper = r * std::max(m, cycle_cap);
    res.provenance = {kLowRangeRule, kUpperRule};
  }
  if (q.r == 1) res.provenance.push_back(kCategoryRule);

  if (options.certify && m >= 2 && q.k >= 4) res.certificates = certify(q.graph, q.k, options.cell_cap);
  return res;
}

std::string explain(const TCResult& res) {
  std::string out;
  out += "m(G) = " + std::to_string(res.m) + ", k = " + std::to_string(res.k) +
         ", r = " + std::to_string(res.r) + "\n";
  if (res.status == TCStatus::Exact)
    out += "TC_" + std::to_string(res.r) + " = " + std::to_string(res.value()) +
           " (hypotheses m >= 2 and k >= 2m hold)\n";
  else
    out += std::to_string(res.lower) + " <= TC_" + std::to_string(res.r) +
           " <= " + std::to_string(res.upper) + "\n";
  for (const auto& p : res.provenance) out += "  rule: " + p + "\n";
  if (res.certificates) {
    const auto& c = *res.certificates;
    out += "certificate at k' = " + std::to_string(c.k_used) + ", d = " + std::to_string(c.d) + ":\n";
    out += "  lambda = " + c.disjoint_report.lambda.to_string() +
           ", mu = " + c.disjoint_report.mu.to_string() + "\n";
    out += "  delta_mu o tau_lambda trivial: " +
           std::string(c.disjoint_report.prop2_trivial.value_or(false) ? "yes" : "no") + "\n";
    out += "  delta_mu o tau_mu injective: " +
           std::string(c.injective_report.prop1_injective.value_or(false) ? "yes" : "no") + "\n";
    for (const auto& e : c.injective_report.entries)
      out += "    " + e.generator_vertex + " -> " + e.detection_vertex + ": " +
             free_generator_decomposition(e.word).to_string() + "\n";
    out += "  b_" + std::to_string(c.d) + " = " + std::to_string(c.homology.betti_d) + " (" +
           c.homology.note + ")\n";
    for (const auto& n : c.notes) out += "  " + n + "\n";
    out += std::string("  certified: ") + (c.certified() ? "yes" : "no") + "\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const TCResult& res) {
  nlohmann::ordered_json out;
  out["status"] = res.status == TCStatus::Exact ? "exact" : "bounded";
  if (res.status == TCStatus::Exact) {
    out["value"] = res.value();
  } else {
    out["lower"] = res.lower;
    out["upper"] = res.upper;
  }
  out["m"] = res.m;
  out["k"] = res.k;
  out["r"] = res.r;
  out["provenance"] = res.provenance;
  if (res.certificates) {
    const auto& c = *res.certificates;
    nlohmann::ordered_json cj;
    cj["d"] = c.d;
    cj["k"] = c.k_used;
    cj["W"] = c.W;
    cj["lambda"] = c.disjoint_report.lambda.to_string();
    cj["mu"] = c.disjoint_report.mu.to_string();
    cj["disjoint_report"] = to_json(c.disjoint_report);
    cj["injective_report"] = to_json(c.injective_report);
    nlohmann::ordered_json h;
    h["d"] = c.homology.d;
    h["k"] = c.homology.k;
    h["betti_d"] = c.homology.betti_d;
    h["cell_counts"] = c.homology.cell_counts;
    h["cell_cap"] = c.homology.cell_cap;
    h["arbitrary_precision"] = c.homology.arbitrary_precision;
    h["nonvanishing"] = c.homology.nonvanishing;
    h["note"] = c.homology.note;
    cj["homology"] = std::move(h);
    cj["notes"] = c.notes;
    cj["certified"] = c.certified();
    out["certificates"] = std::move(cj);
  }
  return out;
}

}  // namespace gbt
