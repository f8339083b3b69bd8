#include "spectrajoin/joins.hpp"

#include <stdexcept>
#include <string>

namespace spectrajoin {

std::string_view to_string(JoinKind kind) {
  switch (kind) {
    case JoinKind::Plain: return "plain";
    case JoinKind::NS: return "ns";
    case JoinKind::NNS: return "nns";
  }
  return "?";
}

JoinKind parse_join_kind(std::string_view text) {
  if (text == "plain") return JoinKind::Plain;
  if (text == "ns") return JoinKind::NS;
  if (text == "nns") return JoinKind::NNS;
  throw std::invalid_argument("unknown join kind '" + std::string(text) + "' (expected plain, ns or nns)");
}

Graph plain_join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph g = disjoint_union(g1, g2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < g2.order(); ++j) g.add_edge(i, n1 + j);
  }
  return g;
}

namespace {

template <typename SplitRule>
Graph splitting_join(const Graph& g1, const Graph& g2, SplitRule connect) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 == 0) return g2;
  Graph g(2 * n1 + n2);
  for (const auto& [i, j] : g1.edges()) g.add_edge(i, j);
  for (const auto& [i, j] : g2.edges()) g.add_edge(2 * n1 + i, 2 * n1 + j);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) g.add_edge(i, 2 * n1 + j);
    for (int j = 0; j < n1; ++j) {
      if (connect(i, j)) g.add_edge(n1 + i, j);
    }
  }
  return g;
}

}  // namespace

Graph ns_join(const Graph& g1, const Graph& g2) {
  return splitting_join(g1, g2, [&](int i, int j) { return g1.adjacent(i, j); });
}

Graph nns_join(const Graph& g1, const Graph& g2) {
  return splitting_join(g1, g2, [&](int i, int j) { return i != j && !g1.adjacent(i, j); });
}

Graph join(JoinKind kind, const Graph& g1, const Graph& g2) {
  switch (kind) {
    case JoinKind::Plain: return plain_join(g1, g2);
    case JoinKind::NS: return ns_join(g1, g2);
    case JoinKind::NNS: return nns_join(g1, g2);
  }
  throw std::invalid_argument("unknown join kind");
}

}  // namespace spectrajoin
