// Command-line front end: construction, exact and numeric spectra, identity
// checks, NICS certificates, regular-graph search and published-value regression.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli_json.hpp"
#include "spectrajoin/cospectral.hpp"
#include "spectrajoin/graph_spec.hpp"
#include "spectrajoin/joins.hpp"
#include "spectrajoin/reference.hpp"
#include "spectrajoin/spectra.hpp"

using namespace spectrajoin;
using spectrajoin::cli::json;

namespace {

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

/// Either --graph, or --join KIND G1 G2.
struct GraphSource {
  std::string graph;
  std::vector<std::string> join_args;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph", graph, "graph spec, e.g. C4+K1, K1,4, g6:Bw");
    auto* j = cmd->add_option("--join", join_args, "KIND G1 G2 with KIND in plain|ns|nns")->expected(3);
    g->excludes(j);
  }

  bool is_join() const { return !join_args.empty(); }
  JoinKind kind() const { return parse_join_kind(join_args.at(0)); }
  Graph left() const { return parse_graph_spec(join_args.at(1)); }
  Graph right() const { return parse_graph_spec(join_args.at(2)); }

  Graph build() const {
    if (is_join()) return join(kind(), left(), right());
    if (graph.empty()) throw std::invalid_argument("give --graph or --join");
    return parse_graph_spec(graph);
  }
};

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- verify --------------------------------------------------------------------

struct VerifyOptions {
  std::string theorem;
  std::string g1;
  std::string g2;
  int random = 0;
  int max_n = 6;
  std::uint64_t seed = 1;
};

json identity_trial(CharpolyIdentity id, const Graph& g1, const Graph& g2, bool& ok) {
  const IdentityCheck c = verify_charpoly_identity(id, g1, g2);
  ok = c.equal;
  return {{"g1", to_graph6(g1)}, {"g2", to_graph6(g2)}, {"pass", c.equal},
          {"lhs", cli::poly_json(c.lhs)}, {"rhs", cli::poly_json(c.rhs)}};
}

json formula_trial(SpectrumFormula f, const Graph& g1, const Graph& g2, bool& ok) {
  const FormulaCheck c = verify_spectrum_formula(f, g1, g2);
  ok = c.equal;
  return {{"g1", to_graph6(g1)},
          {"g2", to_graph6(g2)},
          {"pass", c.equal},
          {"max_deviation", c.max_deviation},
          {"closed_form", cli::spectrum_json(c.closed_form)},
          {"numeric", cli::spectrum_json(c.numeric)}};
}

/// A random regular graph on 1..max_n vertices (uniform over the isomorphism classes
/// of a random admissible (n, r)), used for the spectrum formulas.
Graph random_regular(std::mt19937_64& rng, int max_n, bool need_edges) {
  std::uniform_int_distribution<int> pick_n(need_edges ? 2 : 1, max_n);
  for (;;) {
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_r(need_edges ? 1 : 0, n - 1);
    const int r = pick_r(rng);
    const std::vector<Graph> all = regular_graphs(n, r);
    if (all.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
  }
}

int run_verify(const VerifyOptions& o) {
  json out;
  out["theorem"] = o.theorem;
  out["trials"] = json::array();
  int passed = 0;
  int failed = 0;

  std::optional<CharpolyIdentity> identity;
  std::optional<SpectrumFormula> formula;
  try {
    identity = parse_charpoly_identity(o.theorem);
  } catch (const std::invalid_argument&) {
    formula = parse_spectrum_formula(o.theorem);
  }

  auto run_one = [&](const Graph& g1, const Graph& g2) {
    bool ok = false;
    out["trials"].push_back(identity ? identity_trial(*identity, g1, g2, ok) : formula_trial(*formula, g1, g2, ok));
    (ok ? passed : failed) += 1;
  };

  if (o.random > 0) {
    if (o.max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> pick_n(1, o.max_n);
    std::uniform_real_distribution<double> pick_p(0.2, 0.8);
    for (int t = 0; t < o.random; ++t) {
      if (identity) {
        const int n1 = pick_n(rng);
        const int n2 = pick_n(rng);
        const Graph g1 = random_graph(n1, pick_p(rng), rng);
        const Graph g2 = random_graph(n2, pick_p(rng), rng);
        run_one(g1, g2);
      } else {
        const bool needs_edges = *formula == SpectrumFormula::NsNormalized || *formula == SpectrumFormula::NnsNormalized;
        const Graph g1 = random_regular(rng, o.max_n, needs_edges);
        const Graph g2 = random_regular(rng, o.max_n, false);
        run_one(g1, g2);
      }
    }
  } else {
    if (o.g1.empty() || o.g2.empty()) throw std::invalid_argument("give --g1 and --g2, or --random N");
    const Graph g1 = parse_graph_spec(o.g1);
    const Graph g2 = parse_graph_spec(o.g2);
    if (formula && (!is_regular(g1) || !is_regular(g2))) {
      throw std::invalid_argument("the closed-form spectrum formulas require regular G1 and G2");
    }
    run_one(g1, g2);
  }
  out["passed"] = passed;
  out["failed"] = failed;
  emit(out);
  for (const auto& t : out["trials"]) std::cerr << (t["pass"].get<bool>() ? "PASS" : "FAIL") << ' ' << t["g1"].get<std::string>() << ' ' << t["g2"].get<std::string>() << '\n';
  return failed == 0 ? 0 : 1;
}

// ---- reproduce -----------------------------------------------------------------

json reproduce_table_entry(const ReferenceEntry& e, bool& ok) {
  const ReferenceCheck c = check_reference(e);
  ok = c.passed;
  return {{"example", e.name},    {"join", std::string(to_string(e.join))}, {"left", e.left},
          {"right", e.right},     {"expected", c.expected},                  {"actual", c.actual},
          {"deviation", c.deviation}, {"max_deviation", c.max_deviation},   {"pass", c.passed}};
}

json reproduce_figure(NicsTemplate t, const std::string& name, bool& ok) {
  const auto pair = first_regular_pair_on_ten(default_cache_dir());
  if (!pair) {
    ok = false;
    return {{"example", name}, {"pass", false}, {"error", "no regular cospectral pair on 10 vertices"}};
  }
  const Graph c4 = cycle_graph(4);
  try {
    const NicsReport r = nics_pair(t, {c4, c4, pair->first, pair->second});
    ok = r.nics();
    return {{"example", name}, {"template", std::string(to_string(t))}, {"pass", ok}, {"report", cli::report_json(r)}};
  } catch (const std::logic_error& e) {
    ok = false;
    return {{"example", name}, {"pass", false}, {"error", e.what()}};
  }
}

int run_reproduce(const std::string& which) {
  json out = json::array();
  bool all_ok = true;
  bool matched = false;
  for (const auto& e : reference_table()) {
    if (which != "all" && which != e.name) continue;
    matched = true;
    bool ok = false;
    out.push_back(reproduce_table_entry(e, ok));
    all_ok = all_ok && ok;
  }
  for (const auto& [name, t] : {std::pair{std::string("fig8"), NicsTemplate::NsRegular},
                               std::pair{std::string("fig9"), NicsTemplate::NnsRegular}}) {
    if (which != "all" && which != name) continue;
    matched = true;
    bool ok = false;
    out.push_back(reproduce_figure(t, name, ok));
    all_ok = all_ok && ok;
  }
  if (!matched) throw std::invalid_argument("unknown example '" + which + "'");
  emit(out);
  for (const auto& r : out) {
    std::cerr << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["example"].get<std::string>();
    if (r.contains("max_deviation")) std::cerr << " (max deviation " << r["max_deviation"].get<double>() << ")";
    std::cerr << '\n';
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and cospectrality of neighbors-splitting and non-neighbors-splitting joins"};
  app.require_subcommand(1);
  int exit_code = 0;

  // join
  auto* join_cmd = app.add_subcommand("join", "Build a plain, NS or NNS join");
  std::string join_kind = "ns", join_g1, join_g2, join_out = "json";
  join_cmd->add_option("--kind", join_kind, "plain|ns|nns")->capture_default_str();
  join_cmd->add_option("--g1", join_g1, "left graph spec")->required();
  join_cmd->add_option("--g2", join_g2, "right graph spec")->required();
  join_cmd->add_option("--out", join_out, "graph6|json|dot")->check(CLI::IsMember({"graph6", "json", "dot"}))->capture_default_str();
  join_cmd->callback([&] {
    const Graph g = join(parse_join_kind(join_kind), parse_graph_spec(join_g1), parse_graph_spec(join_g2));
    if (join_out == "graph6") {
      std::cout << to_graph6(g) << '\n';
    } else if (join_out == "dot") {
      std::cout << to_dot(g, "join");
    } else {
      emit(cli::graph_json(g));
    }
  });

  // matrix
  auto* matrix_cmd = app.add_subcommand("matrix", "Print an exact graph matrix (NL as I - D^-1 A)");
  GraphSource matrix_src;
  std::string matrix_kind = "A";
  matrix_src.attach(matrix_cmd);
  matrix_cmd->add_option("--matrix", matrix_kind, "A|L|Q|NL")->capture_default_str();
  matrix_cmd->callback([&] {
    const MatrixKind kind = parse_matrix_kind(matrix_kind);
    emit({{"matrix", std::string(to_string(kind))}, {"rows", matrix_json(build_matrix(matrix_src.build(), kind))}});
  });

  // charpoly
  auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  GraphSource charpoly_src;
  std::string charpoly_kind = "A";
  charpoly_src.attach(charpoly_cmd);
  charpoly_cmd->add_option("--matrix", charpoly_kind, "A|L|Q|NL")->capture_default_str();
  charpoly_cmd->callback([&] {
    const MatrixKind kind = parse_matrix_kind(charpoly_kind);
    emit({{"matrix", std::string(to_string(kind))}, {"charpoly", cli::poly_json(graph_charpoly(charpoly_src.build(), kind))}});
  });

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum, numerically or from a closed form");
  GraphSource spectrum_src;
  std::string spectrum_kind = "A", spectrum_method = "direct";
  spectrum_src.attach(spectrum_cmd);
  spectrum_cmd->add_option("--matrix", spectrum_kind, "A|L|Q|NL")->capture_default_str();
  spectrum_cmd->add_option("--method", spectrum_method, "direct|closed-form")
      ->check(CLI::IsMember({"direct", "closed-form"}))
      ->capture_default_str();
  spectrum_cmd->callback([&] {
    const MatrixKind kind = parse_matrix_kind(spectrum_kind);
    if (spectrum_method == "direct") {
      const Graph g = spectrum_src.build();
      // adjacency spectra keep integer eigenvalues exact
      emit(cli::spectrum_json(kind == MatrixKind::A ? Spectrum(kind, adjacency_eigenvalues(g))
                                                    : numeric_spectrum(g, kind)));
      return;
    }
    if (!spectrum_src.is_join()) throw std::invalid_argument("--method closed-form needs --join KIND G1 G2");
    const auto formula = formula_for(spectrum_src.kind(), kind);
    if (!formula) {
      throw std::invalid_argument("no closed form for the " + std::string(to_string(kind)) + " spectrum of a " +
                                  std::string(to_string(spectrum_src.kind())) + " join");
    }
    const Graph g1 = spectrum_src.left();
    const Graph g2 = spectrum_src.right();
    if (!is_regular(g1) || !is_regular(g2)) {
      throw std::invalid_argument("closed-form spectra require both join components to be regular");
    }
    emit(cli::spectrum_json(closed_form_spectrum(*formula, g1, g2)));
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a characteristic-polynomial identity or closed-form spectrum");
  VerifyOptions vo;
  verify_cmd->add_option("--theorem", vo.theorem, "4.1a|4.1b|4.2a|4.2b|4.3a|4.3b|5.1|6.1|6.2|6.3|6.4")->required();
  verify_cmd->add_option("--g1", vo.g1, "left graph spec");
  verify_cmd->add_option("--g2", vo.g2, "right graph spec");
  verify_cmd->add_option("--random", vo.random, "number of random trials");
  verify_cmd->add_option("--max-n", vo.max_n, "maximum order of random graphs")->capture_default_str();
  verify_cmd->add_option("--seed", vo.seed, "random seed")->capture_default_str();
  verify_cmd->callback([&] { exit_code = run_verify(vo); });

  // nics
  auto* nics_cmd = app.add_subcommand("nics", "Build and certify a NICS pair from a template");
  std::string nics_template;
  std::vector<std::string> nics_inputs;
  bool nics_use_found = false;
  nics_cmd->add_option("--template", nics_template, "cor4.4a|cor4.4b|cor4.5a|cor4.5b|cor5.2|cor6.5")->required();
  nics_cmd->add_option("--inputs", nics_inputs, "G F H (cor4.x) or G1 H1 G2 H2 (cor5.2, cor6.5)");
  nics_cmd->add_flag("--found-pair", nics_use_found,
                     "append the first cospectral regular pair on 10 vertices as the last two inputs");
  nics_cmd->callback([&] {
    const NicsTemplate t = parse_nics_template(nics_template);
    std::vector<Graph> inputs;
    for (const auto& s : nics_inputs) inputs.push_back(parse_graph_spec(s));
    if (nics_use_found) {
      const auto pair = first_regular_pair_on_ten(default_cache_dir());
      if (!pair) throw std::runtime_error("no regular cospectral pair on 10 vertices");
      inputs.push_back(pair->first);
      inputs.push_back(pair->second);
    }
    emit(cli::report_json(nics_pair(t, inputs)));
  });

  // search
  auto* search_cmd = app.add_subcommand("search", "Non-isomorphic cospectral r-regular graphs on n vertices");
  int search_n = 0, search_r = 0;
  bool search_no_cache = false;
  search_cmd->add_option("--n", search_n, "number of vertices (<= 10)")->required();
  search_cmd->add_option("--r", search_r, "degree")->required();
  search_cmd->add_flag("--no-cache", search_no_cache, "ignore and do not write the on-disk cache");
  search_cmd->callback([&] {
    const RegularSearchResult res = search_no_cache ? find_regular_cospectral_pairs(search_n, search_r)
                                                    : cached_regular_search(search_n, search_r, default_cache_dir());
    json out = json::parse(search_to_json(res));
    out["classes"] = res.graphs.size();
    emit(out);
  });

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test with witness");
  std::string iso_g1, iso_g2;
  iso_cmd->add_option("--g1", iso_g1)->required();
  iso_cmd->add_option("--g2", iso_g2)->required();
  iso_cmd->callback([&] {
    const IsomorphismResult r = are_isomorphic(parse_graph_spec(iso_g1), parse_graph_spec(iso_g2));
    json out{{"isomorphic", r.isomorphic}};
    if (r.witness) out["witness"] = *r.witness;
    emit(out);
  });

  // probe
  auto* probe_cmd = app.add_subcommand("probe", "Experimental: NL-cospectrality of joins with a regular cospectral pair");
  std::string probe_side = "right-fixed-G", probe_graph;
  std::vector<std::string> probe_pair;
  probe_cmd->add_option("--side", probe_side, "right-fixed-G|left-fixed-H")->capture_default_str();
  probe_cmd->add_option("--graph", probe_graph, "the fixed graph")->required();
  probe_cmd->add_option("--pair", probe_pair, "H1 H2 (default: first regular pair on 10 vertices)")->expected(2);
  probe_cmd->callback([&] {
    const ProbeSide side = parse_probe_side(probe_side);
    Graph h1, h2;
    if (probe_pair.empty()) {
      const auto pair = first_regular_pair_on_ten(default_cache_dir());
      if (!pair) throw std::runtime_error("no regular cospectral pair on 10 vertices");
      h1 = pair->first;
      h2 = pair->second;
    } else {
      h1 = parse_graph_spec(probe_pair[0]);
      h2 = parse_graph_spec(probe_pair[1]);
    }
    const ProbeReport rep = conjecture_probe(side, parse_graph_spec(probe_graph), h1, h2);
    json out{{"experimental", true}, {"side", std::string(to_string(rep.side))}, {"results", json::array()}};
    for (const auto& r : rep.results) {
      out["results"].push_back({{"join", std::string(to_string(r.join))},
                                {"nl_cospectral", r.nl_cospectral},
                                {"report", cli::report_json(r.report)}});
    }
    emit(out);
  });

  // reproduce
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute published spectra and constructions");
  std::string example = "all";
  reproduce_cmd->add_option("--example", example,
                            "all|k2-ns-f|k2-ns-h|k2-nns-f|k2-nns-h|f-ns-k2|h-ns-k2|f-nns-k2|h-nns-k2|fig8|fig9")
      ->capture_default_str();
  reproduce_cmd->callback([&] { exit_code = run_reproduce(example); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
