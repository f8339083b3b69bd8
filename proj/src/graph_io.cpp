#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "spectrajoin/graph.hpp"

namespace spectrajoin {

namespace {
constexpr int kGraph6Bias = 63;
constexpr int kGraph6MaxOrder = 258047;

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
    return;
  }
  out.push_back('~');
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
}
}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6: order too large");
  std::string out;
  append_order(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  for (char c : text) {
    if (c < kGraph6Bias || c > 126) throw std::invalid_argument("graph6: invalid character");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - kGraph6Bias;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw std::invalid_argument("graph6: unsupported size header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - kGraph6Bias);
    if (n <= 62) throw std::invalid_argument("graph6: non-minimal size header");
    pos = 4;
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " data bytes for n = " +
                                std::to_string(n));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kGraph6Bias;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = text[pos + k / 6] - kGraph6Bias;
    if ((last & ((1 << (6 - static_cast<int>(k % 6))) - 1)) != 0) throw std::invalid_argument("graph6: nonzero padding");
  }
  return g;
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) throw std::invalid_argument("graph JSON needs 'n' and 'edges'");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph::from_edges(j.at("n").get<int>(), edges);
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace spectrajoin
