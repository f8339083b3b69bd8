#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spectrajoin/graph.hpp"

using namespace spectrajoin;

TEST_CASE("families") {
  const Graph k3 = make_family("K", {3});
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  const Graph p4 = make_family("P", {4});
  CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  const Graph c4 = make_family("C", {4});
  CHECK(c4.degrees() == std::vector<int>{2, 2, 2, 2});
  CHECK(make_family("K", {1, 4}) == complete_bipartite(1, 4));
  CHECK(make_family("S", {4}) == complete_bipartite(1, 4));
  CHECK(make_family("E", {3}).edge_count() == 0);
  const Graph pet = petersen_graph();
  CHECK(pet.order() == 10);
  CHECK(is_regular(pet) == 3);
  CHECK_THROWS_AS(make_family("Q", {3}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("C", {2}), std::invalid_argument);
}

TEST_CASE("edge construction rejects loops and bad endpoints") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK(Graph::from_edges(3, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("complements and unions") {
  CHECK(complement(complete_graph(3)).edge_count() == 0);
  CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)).isomorphic);
  CHECK(complement(cycle_graph(4)) == Graph::from_edges(4, {{0, 2}, {1, 3}}));
  const Graph u = disjoint_union(cycle_graph(4), complete_graph(1));
  CHECK(u.order() == 5);
  CHECK(u.degree(4) == 0);
  CHECK(u.edge_count() == 4);
}

TEST_CASE("matrices") {
  const Graph k2 = complete_graph(2);
  CHECK(build_matrix(k2, MatrixKind::L) == ExactMatrix::from_rows({{Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}}));
  CHECK(build_matrix(k2, MatrixKind::Q) == ExactMatrix::from_rows({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}));
  CHECK(build_matrix(k2, MatrixKind::NL) == ExactMatrix::from_rows({{Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}}));

  const Graph f = disjoint_union(cycle_graph(4), complete_graph(1));
  const ExactMatrix nl = build_matrix(f, MatrixKind::NL);
  CHECK(nl(0, 0) == 1);
  CHECK(nl(0, 1) == Rat(-1, 2));
  CHECK(nl(4, 4) == 0);
  const std::vector<double> num = build_numeric_matrix(f, MatrixKind::NL);
  CHECK(num[0 * 5 + 1] == doctest::Approx(-0.5));
  CHECK(num[4 * 5 + 4] == 0.0);

  const Graph p3 = path_graph(3);
  const std::vector<double> sym = build_numeric_matrix(p3, MatrixKind::NL);
  CHECK(sym[0 * 3 + 1] == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(sym[1 * 3 + 0] == sym[0 * 3 + 1]);
}

TEST_CASE("regularity and bipartiteness") {
  CHECK(is_regular(cycle_graph(6)) == 2);
  CHECK_FALSE(is_regular(path_graph(3)).has_value());
  CHECK(is_regular(empty_graph(3)) == 0);
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(empty_graph(2)));
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(complete_graph(3), cycle_graph(3)).isomorphic);
  const Graph f = disjoint_union(cycle_graph(4), complete_graph(1));
  CHECK_FALSE(are_isomorphic(f, complete_bipartite(1, 4)).isomorphic);
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))).isomorphic);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = random_graph(n, 0.45, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    const IsomorphismResult res = are_isomorphic(g, h);
    REQUIRE(res.isomorphic);
    REQUIRE(res.witness.has_value());
    CHECK(is_isomorphism(g, h, *res.witness));

    const Graph other = random_graph(n, 0.45, rng);
    CHECK(are_isomorphic(g, other).isomorphic == oracle::brute_isomorphic(g, other));
  }
}

TEST_CASE("graph6") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("A\x7f"), std::invalid_argument);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 70;
    const Graph g = random_graph(n, 0.3, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("json and dot") {
  const Graph p3 = path_graph(3);
  CHECK(graph_from_json(to_json(p3)) == p3);
  CHECK(to_dot(p3).find("0 -- 1") != std::string::npos);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"edges\": [[0, 0]]}"), std::invalid_argument);
}
