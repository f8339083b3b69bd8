#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "oracles.hpp"
#include "spectrajoin/cospectral.hpp"
#include "spectrajoin/joins.hpp"

using namespace spectrajoin;

namespace {

const Graph& graph_f() {
  static const Graph f = disjoint_union(cycle_graph(4), complete_graph(1));
  return f;
}
const Graph& graph_h() {
  static const Graph h = complete_bipartite(1, 4);
  return h;
}

/// The first non-isomorphic cospectral 4-regular pair on 10 vertices.
const std::pair<Graph, Graph>& regular_pair() {
  static const std::pair<Graph, Graph> pair = [] {
    const RegularSearchResult r = find_regular_cospectral_pairs(10, 4);
    REQUIRE_FALSE(r.pairs.empty());
    return std::make_pair(r.graphs[static_cast<std::size_t>(r.pairs[0].first)],
                          r.graphs[static_cast<std::size_t>(r.pairs[0].second)]);
  }();
  return pair;
}

std::filesystem::path test_cache() {
  return std::filesystem::temp_directory_path() / ("spectrajoin-unit-" + std::to_string(::getpid()));
}

}  // namespace

TEST_CASE("exact cospectrality of the small example pair") {
  CHECK(are_cospectral_exact(graph_f(), graph_h(), MatrixKind::A));
  CHECK_FALSE(are_cospectral_exact(graph_f(), graph_h(), MatrixKind::L));
  CHECK_FALSE(are_cospectral_exact(complete_graph(3), complete_graph(4), MatrixKind::A));
  CHECK(graph_charpoly(graph_f(), MatrixKind::A) == oracle::faddeev_leverrier(build_matrix(graph_f(), MatrixKind::A)));
}

TEST_CASE("snics verdict") {
  const NicsReport r = snics_verdict(graph_f(), graph_h(), {MatrixKind::A, MatrixKind::L});
  REQUIRE(r.verdicts.size() == 2);
  CHECK(r.verdicts[0].cospectral);
  CHECK_FALSE(r.verdicts[1].cospectral);
  CHECK_FALSE(r.isomorphic);
  CHECK_FALSE(r.nics());
  CHECK(r.consistent());

  const NicsReport a_only = snics_verdict(graph_f(), graph_h(), {MatrixKind::A});
  CHECK(a_only.nics());

  const NicsReport same = snics_verdict(cycle_graph(5), complement(cycle_graph(5)), {MatrixKind::A});
  CHECK(same.isomorphic);
  REQUIRE(same.witness.has_value());
  CHECK(is_isomorphism(same.g, same.h, *same.witness));
  CHECK_FALSE(same.nics());

  NicsReport tampered = r;
  tampered.verdicts[1].cospectral = true;
  CHECK_FALSE(tampered.consistent());
}

TEST_CASE("charpoly identities on named examples") {
  const IdentityCheck a = verify_charpoly_identity(CharpolyIdentity::AdjacencyNns, path_graph(3), complete_graph(2));
  CHECK(a.equal);
  CHECK(a.lhs == graph_charpoly(nns_join(path_graph(3), complete_graph(2)), MatrixKind::A));
  CHECK(verify_charpoly_identity(CharpolyIdentity::LaplacianNs, graph_f(), complete_graph(2)).equal);
  CHECK(verify_charpoly_identity(CharpolyIdentity::SignlessNns, Graph(1), Graph(1)).equal);
  CHECK(parse_charpoly_identity("4.2b") == CharpolyIdentity::LaplacianNs);
  CHECK(to_string(CharpolyIdentity::SignlessNs) == "4.3b");
  CHECK_THROWS_AS(parse_charpoly_identity("4.9"), std::invalid_argument);
}

TEST_CASE("charpoly identities on random pairs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g1 = random_graph(1 + trial % 4, 0.5, rng);
    const Graph g2 = random_graph(1 + (trial / 4) % 4, 0.5, rng);
    for (CharpolyIdentity id : kAllIdentities) {
      const IdentityCheck c = verify_charpoly_identity(id, g1, g2);
      CHECK_MESSAGE(c.equal, to_string(id), " ", to_graph6(g1), " ", to_graph6(g2));
      // lhs from an independent join construction and Faddeev-LeVerrier
      const Graph j = oracle::definition_join(g1, g2, identity_join(id) == JoinKind::NNS);
      CHECK(c.rhs == oracle::faddeev_leverrier(build_matrix(j, identity_matrix(id))));
    }
  }
}

TEST_CASE("identity formula at a point equals the determinant") {
  const Graph g1 = cycle_graph(4);
  const Graph g2 = path_graph(3);
  for (CharpolyIdentity id : kAllIdentities) {
    const ExactMatrix m = build_matrix(join(identity_join(id), g1, g2), identity_matrix(id));
    const Rat x(37);
    const auto value = identity_formula_at(id, g1, g2, x);
    REQUIRE(value.has_value());
    CHECK(*value == determinant(shifted(x, m)));
  }
}

TEST_CASE("NICS templates") {
  const auto& [f, h] = regular_pair();
  for (const Graph& g : {Graph(1), complete_graph(2), path_graph(3)}) {
    const NicsReport a = nics_pair(NicsTemplate::NsFixedLeft, {g, f, h});
    CHECK(a.nics());
    CHECK(a.consistent());
    CHECK(nics_pair(NicsTemplate::NnsFixedLeft, {g, f, h}).nics());
    CHECK(nics_pair(NicsTemplate::NsFixedRight, {g, f, h}).nics());
    CHECK(nics_pair(NicsTemplate::NnsFixedRight, {g, f, h}).nics());
  }
  CHECK(template_arity(NicsTemplate::NsRegular) == 4);
  CHECK(template_arity(NicsTemplate::NsFixedLeft) == 3);
  CHECK(parse_nics_template("cor6.5") == NicsTemplate::NnsRegular);
  CHECK(to_string(NicsTemplate::NsFixedRight) == "cor4.5a");
  CHECK(template_kinds(NicsTemplate::NsRegular).size() == 4);
  // precondition failures
  CHECK_THROWS_AS(nics_pair(NicsTemplate::NsFixedLeft, {Graph(1), f}), std::invalid_argument);
  CHECK_THROWS_AS(nics_pair(NicsTemplate::NsFixedLeft, {Graph(1), graph_f(), graph_h()}), std::invalid_argument);
  CHECK_THROWS_AS(nics_pair(NicsTemplate::NnsFixedRight, {Graph(1), f, f}), std::invalid_argument);
  const NicsReport big = nics_pair(NicsTemplate::NsRegular, {cycle_graph(4), cycle_graph(4), f, h});
  CHECK(big.nics());
  CHECK(big.verdicts.size() == 4);
  CHECK_THROWS_AS(nics_pair(NicsTemplate::NsFixedLeft, {Graph(1), f, complete_graph(5)}), std::invalid_argument);
  CHECK_THROWS_AS(nics_pair(NicsTemplate::NsRegular, {cycle_graph(4), path_graph(3), cycle_graph(4), path_graph(3)}),
                  std::invalid_argument);
}

TEST_CASE("regular graph enumeration counts") {
  CHECK(regular_graphs(6, 2).size() == 2);    // C6, 2K3
  CHECK(regular_graphs(8, 3).size() == 6);
  CHECK(regular_graphs(10, 3).size() == 21);
  CHECK(regular_graphs(7, 4).size() == 2);
  CHECK(regular_graphs(5, 3).empty());
  CHECK(regular_graphs(10, 2).size() == 5);
  for (const Graph& g : regular_graphs(8, 3)) CHECK(is_regular(g) == 3);
  CHECK_THROWS_AS(regular_graphs(13, 2), std::invalid_argument);
}

TEST_CASE("regular cospectral search") {
  CHECK(find_regular_cospectral_pairs(8, 3).pairs.empty());
  CHECK(find_regular_cospectral_pairs(9, 4).pairs.empty());
  const RegularSearchResult r = find_regular_cospectral_pairs(10, 4);
  CHECK(r.pairs.size() == 2);
  for (const auto& [i, j] : r.pairs) {
    const Graph& g = r.graphs[static_cast<std::size_t>(i)];
    const Graph& h = r.graphs[static_cast<std::size_t>(j)];
    CHECK(are_cospectral_exact(g, h, MatrixKind::A));
    CHECK_FALSE(are_isomorphic(g, h).isomorphic);
    CHECK(regular_equivalence_check(g, h));
  }
}

TEST_CASE("search cache round trip and corruption recovery") {
  const auto dir = test_cache();
  std::filesystem::remove_all(dir);
  const RegularSearchResult fresh = cached_regular_search(8, 3, dir);
  const auto file = dir / "regular_n8_r3.json";
  CHECK(std::filesystem::exists(file));
  const RegularSearchResult loaded = cached_regular_search(8, 3, dir);
  CHECK(loaded.graphs.size() == fresh.graphs.size());
  CHECK(search_to_json(loaded) == search_to_json(fresh));
  {
    std::ofstream out(file);
    out << "{\"n\": 8, \"r\": 3, \"graphs\": [\"Gs\"], \"pairs\": [[0, 0]]}";
  }
  CHECK(cached_regular_search(8, 3, dir).graphs.size() == 6);
  {
    std::ofstream out(file);
    out << "not json";
  }
  CHECK(cached_regular_search(8, 3, dir).graphs.size() == 6);
  std::filesystem::remove_all(dir);
}

TEST_CASE("regular equivalence check") {
  CHECK(regular_equivalence_check(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
  CHECK(regular_equivalence_check(cycle_graph(5), complement(cycle_graph(5))));
  CHECK_THROWS_AS(regular_equivalence_check(path_graph(3), path_graph(3)), std::invalid_argument);
  CHECK_THROWS_AS(regular_equivalence_check(cycle_graph(4), complete_graph(4)), std::invalid_argument);
}

TEST_CASE("probe on small fixed graphs") {
  const auto& [h1, h2] = regular_pair();
  for (const Graph& g : {Graph(1), cycle_graph(4)}) {
    const ProbeReport rep = conjecture_probe(ProbeSide::PairRight, g, h1, h2);
    REQUIRE(rep.results.size() == 2);
    CHECK(rep.results[0].join == JoinKind::NS);
    for (const ProbeResult& p : rep.results) {
      CHECK(p.nl_cospectral);
      CHECK(p.report.consistent());
    }
  }
  CHECK(parse_probe_side("left-fixed-H") == ProbeSide::PairLeft);
  CHECK_THROWS_AS(conjecture_probe(ProbeSide::PairLeft, Graph(1), graph_f(), graph_h()), std::invalid_argument);
}
