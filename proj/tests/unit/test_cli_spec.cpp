#include <doctest.h>

#include "spectrajoin/graph_spec.hpp"

using namespace spectrajoin;

TEST_CASE("named families") {
  CHECK(parse_graph_spec("K4") == complete_graph(4));
  CHECK(parse_graph_spec("C5") == cycle_graph(5));
  CHECK(parse_graph_spec("P3") == path_graph(3));
  CHECK(parse_graph_spec("E2") == empty_graph(2));
  CHECK(parse_graph_spec("S4") == complete_bipartite(1, 4));
  CHECK(parse_graph_spec("K1,4") == complete_bipartite(1, 4));
  CHECK(parse_graph_spec("Petersen") == petersen_graph());
}

TEST_CASE("unions and copies") {
  CHECK(parse_graph_spec("C4+K1") == disjoint_union(cycle_graph(4), complete_graph(1)));
  CHECK(parse_graph_spec("2K3") == disjoint_union(complete_graph(3), complete_graph(3)));
  CHECK(parse_graph_spec("K2+2K1").order() == 4);
  CHECK(parse_graph_spec("K2+g6:Bw") == disjoint_union(complete_graph(2), complete_graph(3)));
  CHECK(parse_graph_spec("g6:C~") == complete_graph(4));
}

TEST_CASE("malformed specs are rejected") {
  for (const char* bad : {"", "K", "X3", "C2", "K4+", "0K3", "g6:", "K1,", "g6:Bw+K1"}) {
    CHECK_THROWS_AS_MESSAGE(parse_graph_spec(bad), std::invalid_argument, bad);
  }
}
