#pragma once

/// \file graph_spec.hpp
/// One-token graph descriptions used by the command line and the reference table.
///
///   K4, C5, P3, E2 (edgeless), S4 (star K1,4), K1,4 (complete bipartite), Petersen,
///   g6:<graph6> literals, "+" for disjoint union and a leading count for copies ("2K3").

#include <string_view>

#include "spectrajoin/graph.hpp"

namespace spectrajoin {

/// Throws std::invalid_argument with a message naming the offending term.
Graph parse_graph_spec(std::string_view text);

}  // namespace spectrajoin
