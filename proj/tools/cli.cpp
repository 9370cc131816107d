#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gbt/config_moves.hpp"
#include "gbt/cube_complex.hpp"
#include "gbt/error.hpp"
#include "gbt/graph.hpp"
#include "gbt/graph_io.hpp"
#include "gbt/partitions.hpp"
#include "gbt/tc.hpp"
#include "gbt/theta_word.hpp"
#include "gbt/verifier.hpp"

namespace gbt::cli {

namespace {

using json = nlohmann::ordered_json;

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error("expected I,J but got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error("expected I,J but got '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string graph_id(const std::string& path) { return std::filesystem::path(path).stem().string(); }

json analyze(const Graph& g) {
  json out;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["connected"] = g.connected();
  out["m"] = essential_count(g);
  out["essential_vertices"] = essential_vertex_names(g);
  json valences = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) valences[g.vertex_name(v)] = g.valence(v);
  out["valences"] = std::move(valences);
  out["first_betti"] = g.first_betti_number();
  return out;
}

// Pair on boundary 1, 2 of the star at `center`; everyone else on the first
// free non-essential vertices outside the closed star.
DiscreteConfiguration epsilon_base(const Graph& g, const StarEmbedding& emb, std::pair<int, int> pair, int k) {
  DiscreteConfiguration c;
  c.positions.assign(static_cast<std::size_t>(k), g.vertex_count());
  c.positions[static_cast<std::size_t>(pair.first - 1)] = emb.boundary[0];
  c.positions[static_cast<std::size_t>(pair.second - 1)] = emb.boundary[1];
  const auto star = closed_star_vertices(g, emb.center);
  VertexId next = 0;
  for (int p = 1; p <= k; ++p) {
    if (p == pair.first || p == pair.second) continue;
    while (next < g.vertex_count() &&
           (std::binary_search(star.begin(), star.end(), next) || is_essential(g, next)))
      ++next;
    if (next == g.vertex_count()) throw Error("not enough free vertices to park the other particles");
    c.positions[static_cast<std::size_t>(p - 1)] = next++;
  }
  return c;
}

json word_json(const ThetaWord& w) {
  json out;
  out["word"] = w.to_string();
  out["basis_word"] = free_generator_decomposition(w).to_string();
  out["encoding"] = encode(w).to_string();
  out["trivial"] = is_trivial(w);
  out["abelianization"] = abelianize(w);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Configuration spaces of graphs, braid group loops and topological complexity", "gbt"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::string graph_path;
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "Graph JSON file")->required();
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Valences, essential vertices and Betti number");
  add_graph(analyze_cmd);

  auto* subdivide_cmd = app.add_subcommand("subdivide", "Subdivide a graph");
  add_graph(subdivide_cmd);
  bool paper = false;
  std::optional<int> abrams_k;
  auto* paper_opt = subdivide_cmd->add_flag("--paper", paper, "Separate the closed stars of essential vertices");
  auto* abrams_opt = subdivide_cmd->add_option("--abrams", abrams_k, "Cut every edge into K+1 pieces");
  paper_opt->excludes(abrams_opt);

  auto* epsilon_cmd = app.add_subcommand("epsilon", "Exchange loop at a vertex and its theta word");
  add_graph(epsilon_cmd);
  std::string eps_vertex, eps_pair, eps_track;
  std::optional<int> eps_k;
  epsilon_cmd->add_option("--vertex", eps_vertex, "Essential vertex")->required();
  epsilon_cmd->add_option("--pair", eps_pair, "Exchanging particles I,J")->required();
  epsilon_cmd->add_option("--k", eps_k, "Particle count (default max(I,J))");
  epsilon_cmd->add_option("--track", eps_track, "Tracked pair for the projection (default: the pair)");

  auto* verify_cmd = app.add_subcommand("verify", "Check toric/detection composites");
  add_graph(verify_cmd);
  int verify_k = 0;
  std::string verify_W, verify_lambda, verify_mu;
  bool all_pairs = false;
  verify_cmd->add_option("--k", verify_k, "Particle count, 2|W|")->required();
  verify_cmd->add_option("--W", verify_W, "Comma-separated essential vertices");
  auto* all_opt = verify_cmd->add_flag("--all-pairs", all_pairs, "Every ordered pair of partitions");
  auto* lambda_opt = verify_cmd->add_option("--lambda", verify_lambda, "Partition, e.g. \"u:{1,2} w:{3,4}\"");
  auto* mu_opt = verify_cmd->add_option("--mu", verify_mu, "Partition");
  all_opt->excludes(lambda_opt);
  all_opt->excludes(mu_opt);

  auto* homology_cmd = app.add_subcommand("homology", "Betti numbers of the discretized configuration space");
  add_graph(homology_cmd);
  int hom_k = 0;
  bool ordered = false, unordered = false, hom_subdivide = false, no_check = false;
  std::optional<int> max_dim;
  std::optional<std::uint32_t> mod_p;
  std::string export_path;
  homology_cmd->add_option("--k", hom_k, "Particle count")->required();
  auto* ord_opt = homology_cmd->add_flag("--ordered", ordered, "Ordered configurations");
  auto* unord_opt = homology_cmd->add_flag("--unordered", unordered, "Unordered configurations");
  ord_opt->excludes(unord_opt);
  homology_cmd->add_option("--max-dim", max_dim, "Highest Betti number to compute");
  homology_cmd->add_flag("--subdivide", hom_subdivide, "Cut every edge into K+1 pieces first");
  homology_cmd->add_flag("--no-check", no_check, "Skip the subdivision check");
  homology_cmd->add_option("--mod-p", mod_p, "Also report a non-certifying preview over Z/p");
  homology_cmd->add_option("--export", export_path, "Write the chain complex to a file");

  auto* tc_cmd = app.add_subcommand("tc", "Evaluate TC_r of the configuration space");
  add_graph(tc_cmd);
  int tc_k = 0, tc_r = 0;
  bool certify = false, explain_flag = false;
  tc_cmd->add_option("--k", tc_k, "Particle count")->required();
  tc_cmd->add_option("--r", tc_r, "Sequence length r")->required();
  tc_cmd->add_flag("--certify", certify, "Attach verifier and homology certificates");
  tc_cmd->add_flag("--explain", explain_flag, "Include a textual derivation");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  auto emit = [&](const json& j) { out << j.dump(pretty ? 2 : -1) << "\n"; };

  try {
    const std::size_t cap = cell_cap_from_env();
    const Graph g = load_graph_file(graph_path);

    if (analyze_cmd->parsed()) {
      emit(analyze(g));
    } else if (subdivide_cmd->parsed()) {
      if (!paper && !abrams_k) throw Error("subdivide needs --paper or --abrams K");
      emit(graph_to_json(paper ? paper_subdivide(g) : abrams_subdivide(g, *abrams_k)));
    } else if (epsilon_cmd->parsed()) {
      Graph local = paper_subdivide(g);
      const auto pair = parse_pair(eps_pair);
      const int k = eps_k.value_or(std::max(pair.first, pair.second));
      StarEmbedding emb = star_embedding(local, eps_vertex);
      DiscreteConfiguration base;
      try {
        base = epsilon_base(local, emb, pair, k);
      } catch (const Error&) {
        // Too few parking spots: cut every edge into k + 1 pieces and retry.
        local = abrams_subdivide(local, k);
        emb = star_embedding(local, eps_vertex);
        base = epsilon_base(local, emb, pair, k);
      }
      const LoopSpec loop = build_epsilon(local, emb, pair, base);
      const auto tracked = eps_track.empty() ? pair : parse_pair(eps_track);
      json j;
      j["vertex"] = eps_vertex;
      j["pair"] = {pair.first, pair.second};
      j["tracked"] = {tracked.first, tracked.second};
      std::vector<std::string> base_names;
      for (VertexId v : base.positions) base_names.push_back(local.vertex_name(v));
      j["base"] = base_names;
      std::vector<std::string> moves;
      for (const Move& mv : loop.moves) moves.push_back(format_move(local, mv));
      j["moves"] = moves;
      j["projection"] = word_json(q_project(local, loop, tracked, emb.center));
      emit(j);
    } else if (verify_cmd->parsed()) {
      const Graph local = paper_subdivide(g);
      std::vector<std::string> W = split_list(verify_W);
      if (W.empty()) {
        const auto essential = essential_vertex_names(local);
        const std::size_t d = static_cast<std::size_t>(std::max(verify_k, 0) / 2);
        if (d > essential.size()) throw Error("--k exceeds twice the number of essential vertices");
        W.assign(essential.begin(), essential.begin() + static_cast<std::ptrdiff_t>(d));
      }
      if (verify_k != 2 * static_cast<int>(W.size())) throw Error("--k must equal 2|W|");
      const std::string id = graph_id(graph_path);
      if (all_pairs) {
        emit(to_json(verify_all(local, W, 4, id)));
      } else {
        BinaryWPartition lambda, mu;
        if (!verify_lambda.empty()) {
          lambda = parse_partition(verify_lambda);
          mu = verify_mu.empty() ? lambda : parse_partition(verify_mu);
        } else {
          if (!verify_mu.empty()) throw Error("--mu requires --lambda");
          auto witness = witness_disjoint_pair(verify_k, W);
          if (!witness) throw Error("no disjoint pair exists for |W| = 1; pass --lambda");
          lambda = witness->first;
          mu = witness->second;
        }
        emit(to_json(verify_proposition(local, lambda, mu, id)));
      }
    } else if (homology_cmd->parsed()) {
      if (!ordered && !unordered) throw Error("homology needs --ordered or --unordered");
      const Graph target = hom_subdivide ? abrams_subdivide(g, hom_k) : g;
      CubeBuildOptions options;
      options.check_subdivision = !no_check;
      options.cell_cap = cap;
      if (max_dim) options.max_dim = *max_dim + 1;
      const CubeComplex c(target, hom_k, ordered, options);
      const BettiVector b = betti(c, max_dim);
      json j;
      j["k"] = hom_k;
      j["ordered"] = ordered;
      std::vector<std::size_t> counts;
      for (int p = 0; p <= c.top_dimension(); ++p) counts.push_back(c.cell_count(p));
      j["cells"] = counts;
      j["cell_cap"] = cap;
      j["betti"] = b.betti;
      j["ranks"] = b.ranks;
      if (!c.truncated()) j["euler_characteristic"] = c.euler_characteristic();
      j["boundary_squared_zero"] = boundary_squared_zero(c);
      j["arbitrary_precision"] = b.arbitrary_precision;
      if (mod_p) {
        json preview;
        preview["p"] = *mod_p;
        preview["betti"] = betti_mod_p(c, *mod_p);
        preview["certifying"] = false;
        j["mod_p_preview"] = std::move(preview);
      }
      if (!export_path.empty()) {
        std::ofstream file(export_path);
        if (!file) throw Error("cannot write '" + export_path + "'");
        write_chain_complex(file, c);
      }
      emit(j);
    } else if (tc_cmd->parsed()) {
      EvaluateOptions options;
      options.certify = certify;
      options.cell_cap = cap;
      const TCResult res = evaluate({g, tc_k, tc_r}, options);
      json j = to_json(res);
      if (explain_flag) j["explanation"] = explain(res);
      emit(j);
    }
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gbt::cli
