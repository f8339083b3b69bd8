#pragma once

/// \file joins.hpp
/// Plain join, neighbors-splitting (NS) join and non-neighbors-splitting (NNS) join.
///
/// Vertex order of the splitting joins is normative: u_1..u_{n1} (copy of G1),
/// then the split vertices u'_1..u'_{n1}, then v_1..v_{n2} (copy of G2). Every
/// block-matrix formula in this library relies on that layout.

#include <string_view>

#include "spectrajoin/graph.hpp"

namespace spectrajoin {

enum class JoinKind { Plain, NS, NNS };

std::string_view to_string(JoinKind kind);
/// Accepts "plain", "ns", "nns".
JoinKind parse_join_kind(std::string_view text);

/// G1 vertices, then G2 vertices, with every cross edge.
Graph plain_join(const Graph& g1, const Graph& g2);

/// Adds u'_i adjacent to the G1-neighbours of u_i on top of the plain join.
/// An empty G1 returns G2 unchanged.
Graph ns_join(const Graph& g1, const Graph& g2);

/// Adds u'_i adjacent to the G1-non-neighbours u_j (j != i) on top of the plain join.
Graph nns_join(const Graph& g1, const Graph& g2);

Graph join(JoinKind kind, const Graph& g1, const Graph& g2);

}  // namespace spectrajoin
