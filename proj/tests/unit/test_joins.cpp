#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spectrajoin/joins.hpp"

using namespace spectrajoin;

TEST_CASE("plain join") {
  CHECK(plain_join(Graph(1), Graph(1)) == complete_graph(2));
  CHECK(plain_join(empty_graph(2), empty_graph(3)) == complete_bipartite(2, 3));
}

TEST_CASE("small splitting joins") {
  const Graph k2 = complete_graph(2);
  const Graph k1 = Graph(1);
  // u1 u2 | u1' u2' | v1
  CHECK(ns_join(k2, k1).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}});
  CHECK(nns_join(k2, k1).edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 4}, {1, 4}});
  CHECK(nns_join(empty_graph(2), k1).edge_count() == 4);
  CHECK(ns_join(path_graph(4), path_graph(2)).edge_count() == 18);
  CHECK(nns_join(path_graph(4), path_graph(2)).edge_count() == 18);
}

TEST_CASE("joins match the definition and the degree formulas") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n1 = 1 + trial % 5;
    const int n2 = 1 + (trial / 5) % 5;
    const Graph g1 = random_graph(n1, 0.5, rng);
    const Graph g2 = random_graph(n2, 0.5, rng);
    for (bool nns : {false, true}) {
      const Graph j = nns ? nns_join(g1, g2) : ns_join(g1, g2);
      CHECK(j == oracle::definition_join(g1, g2, nns));
      CHECK(join(nns ? JoinKind::NNS : JoinKind::NS, g1, g2) == j);
      for (int i = 0; i < n1; ++i) {
        const int d = g1.degree(i);
        const int split = nns ? n1 - 1 - d : d;
        CHECK(j.degree(i) == d + split + n2);
        CHECK(j.degree(n1 + i) == split);
      }
      std::size_t g1_edges = g1.edge_count();
      for (int v = 0; v < n2; ++v) CHECK(j.degree(2 * n1 + v) == g2.degree(v) + n1);
      const std::size_t split_edges =
          nns ? static_cast<std::size_t>(n1 * (n1 - 1)) - 2 * g1_edges : 2 * g1_edges;
      CHECK(j.edge_count() == g1_edges + split_edges + g2.edge_count() + static_cast<std::size_t>(n1 * n2));
    }
  }
}

TEST_CASE("join kind names") {
  CHECK(parse_join_kind("ns") == JoinKind::NS);
  CHECK(parse_join_kind("nns") == JoinKind::NNS);
  CHECK(parse_join_kind("plain") == JoinKind::Plain);
  CHECK(to_string(JoinKind::NNS) == "nns");
  CHECK_THROWS_AS(parse_join_kind("xyz"), std::invalid_argument);
}
