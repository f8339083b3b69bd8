#include "spectrajoin/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace spectrajoin {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::A: return "A";
    case MatrixKind::L: return "L";
    case MatrixKind::Q: return "Q";
    case MatrixKind::NL: return "NL";
  }
  return "?";
}

MatrixKind parse_matrix_kind(std::string_view text) {
  std::string upper(text);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "A") return MatrixKind::A;
  if (upper == "L") return MatrixKind::L;
  if (upper == "Q") return MatrixKind::Q;
  if (upper == "NL" || upper == "N") return MatrixKind::NL;
  throw std::invalid_argument("unknown matrix kind '" + std::string(text) + "' (expected A, L, Q or NL)");
}

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  n_ = n;
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("loops are not allowed in a simple graph");
  bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

void Graph::remove_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] &= ~(std::uint64_t{1} << (j & 63));
  bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
}

int Graph::degree(int v) const {
  int d = 0;
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (adjacent(v, j)) out.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Families

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("P_n needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("C_n needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph empty_graph(int n) {
  if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
  return Graph(n);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("K_{a,b} needs a, b >= 1");
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

Graph make_family(std::string_view family, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family '" + std::string(family) + "' expects " + std::to_string(count) +
                                  " parameter(s)");
    }
    for (int p : params) {
      if (p < 1) throw std::invalid_argument("family sizes must be positive");
    }
  };
  if (family == "K") {
    if (params.size() == 2) {
      need(2);
      return complete_bipartite(params[0], params[1]);
    }
    need(1);
    return complete_graph(params[0]);
  }
  if (family == "P") {
    need(1);
    return path_graph(params[0]);
  }
  if (family == "C") {
    need(1);
    return cycle_graph(params[0]);
  }
  if (family == "E") {
    need(1);
    return empty_graph(params[0]);
  }
  if (family == "S") {
    need(1);
    return complete_bipartite(1, params[0]);
  }
  if (family == "Petersen") {
    need(0);
    return petersen_graph();
  }
  throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

// ---------------------------------------------------------------------------
// Operations

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) c.add_edge(i, j);
    }
  }
  return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.order() + h.order());
  for (const auto& [i, j] : g.edges()) u.add_edge(i, j);
  for (const auto& [i, j] : h.edges()) u.add_edge(g.order() + i, g.order() + j);
  return u;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: permutation size");
  Graph out(g.order());
  for (const auto& [i, j] : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int r = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

ExactMatrix build_matrix(const Graph& g, MatrixKind kind) {
  const auto n = static_cast<std::size_t>(g.order());
  ExactMatrix m(n, n);
  const std::vector<int> deg = g.degrees();
  for (std::size_t i = 0; i < n; ++i) {
    const int d = deg[i];
    switch (kind) {
      case MatrixKind::A: break;
      case MatrixKind::L:
      case MatrixKind::Q: m(i, i) = d; break;
      case MatrixKind::NL: m(i, i) = d > 0 ? 1 : 0; break;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!g.adjacent(static_cast<int>(i), static_cast<int>(j))) continue;
      switch (kind) {
        case MatrixKind::A:
        case MatrixKind::Q: m(i, j) = 1; break;
        case MatrixKind::L: m(i, j) = -1; break;
        case MatrixKind::NL: m(i, j) = Rat(-1, d); break;
      }
    }
  }
  return m;
}

std::vector<double> build_numeric_matrix(const Graph& g, MatrixKind kind) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<double> m(n * n, 0.0);
  const std::vector<int> deg = g.degrees();
  for (std::size_t i = 0; i < n; ++i) {
    const double di = deg[i];
    switch (kind) {
      case MatrixKind::A: break;
      case MatrixKind::L:
      case MatrixKind::Q: m[i * n + i] = di; break;
      case MatrixKind::NL: m[i * n + i] = deg[i] > 0 ? 1.0 : 0.0; break;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!g.adjacent(static_cast<int>(i), static_cast<int>(j))) continue;
      switch (kind) {
        case MatrixKind::A:
        case MatrixKind::Q: m[i * n + j] = 1.0; break;
        case MatrixKind::L: m[i * n + j] = -1.0; break;
        case MatrixKind::NL: m[i * n + j] = -1.0 / std::sqrt(di * static_cast<double>(deg[j])); break;
      }
    }
  }
  return m;
}

}  // namespace spectrajoin
