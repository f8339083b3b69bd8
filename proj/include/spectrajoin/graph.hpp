#pragma once

/// \file graph.hpp
/// Simple undirected graphs, standard families, the four graph matrices,
/// canonical labelling / isomorphism, and graph6 / JSON / DOT I/O.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectrajoin/exact.hpp"

namespace spectrajoin {

/// Which graph matrix is meant: adjacency, Laplacian, signless Laplacian,
/// normalized Laplacian.
enum class MatrixKind { A, L, Q, NL };

inline constexpr MatrixKind kAllKinds[] = {MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::NL};

std::string_view to_string(MatrixKind kind);
/// Accepts "A", "L", "Q", "NL" (case-insensitive).
MatrixKind parse_matrix_kind(std::string_view text);

/// Simple undirected graph on vertices 0..n-1, stored as packed adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on loops or out-of-range endpoints; duplicates are merged.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  bool adjacent(int i, int j) const {
    return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1U;
  }
  int degree(int v) const;
  std::vector<int> degrees() const;
  int max_degree() const;
  std::size_t edge_count() const;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> neighbors(int v) const;

  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  /// Packed adjacency row of v (words_per_row() 64-bit words).
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Named families: "K" (n), "P" (n), "C" (n), "E" (empty, n), "S" (star K_{1,n}),
/// "Kab" (complete bipartite a, b), "Petersen" (no params).
Graph make_family(std::string_view family, const std::vector<int>& params);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
/// Erdos-Renyi G(n, p): each pair is an edge independently with probability p.
Graph random_graph(int n, double p, std::mt19937_64& rng);

Graph complement(const Graph& g);
/// Vertices of g first, then h; no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

std::optional<int> is_regular(const Graph& g);
bool is_bipartite(const Graph& g);

/// Exact A, L = D - A, Q = D + A, or the rational similar form I - D^{-1}A of the
/// normalized Laplacian with all-zero rows and columns at isolated vertices.
ExactMatrix build_matrix(const Graph& g, MatrixKind kind);

/// Symmetric floating-point matrix, row-major. For NL this is
/// I - D^{-1/2} A D^{-1/2} with isolated vertices contributing zero rows.
std::vector<double> build_numeric_matrix(const Graph& g, MatrixKind kind);

/// Canonical labelling: `order[p]` is the vertex placed at position p. Two graphs
/// are isomorphic iff their canonical codes coincide.
struct CanonicalForm {
  std::vector<int> order;
  std::vector<std::uint64_t> code;
};

CanonicalForm canonical_form(const Graph& g);

struct IsomorphismResult {
  bool isomorphic = false;
  /// witness[v] = image in h of vertex v of g.
  std::optional<std::vector<int>> witness;
};

IsomorphismResult are_isomorphic(const Graph& g, const Graph& h);

/// True when witness is a bijection mapping g onto h edge-for-edge.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& witness);

std::string to_graph6(const Graph& g);
/// Throws std::invalid_argument on malformed input.
Graph from_graph6(std::string_view text);

/// {"n": int, "edges": [[i, j], ...]} with i < j, sorted.
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace spectrajoin
