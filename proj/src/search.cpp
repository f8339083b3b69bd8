// Exhaustive generation of small regular graphs and the cospectral-pair search.

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spectrajoin/cospectral.hpp"

namespace spectrajoin {

namespace {

using Code = std::vector<std::uint64_t>;

/// Row-by-row backtracking over edge sets with every vertex of degree r.
/// Vertices after the current one whose rows agree are interchangeable, so
/// only prefixes of each such class are tried.
class RegularGenerator {
 public:
  RegularGenerator(int n, int r) : n_(n), r_(r), g_(n), deg_(static_cast<std::size_t>(n), 0) {}

  std::vector<Graph> run() {
    place(0);
    std::vector<Graph> out;
    out.reserve(found_.size());
    for (auto& [code, graph] : found_) out.push_back(std::move(graph));
    return out;
  }

 private:
  void place(int i) {
    if (i == n_) {
      record();
      return;
    }
    const int need = r_ - deg(i);
    std::map<std::vector<std::uint64_t>, std::vector<int>> by_row;
    for (int j = i + 1; j < n_; ++j) {
      if (deg(j) < r_) by_row[std::vector<std::uint64_t>(g_.row(j), g_.row(j) + g_.words_per_row())].push_back(j);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [row, members] : by_row) classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end());
    choose(i, classes, 0, need);
  }

  void choose(int i, const std::vector<std::vector<int>>& classes, std::size_t c, int need) {
    if (need == 0) {
      if (feasible(i)) place(i + 1);
      return;
    }
    if (c == classes.size()) return;
    int available = 0;
    for (std::size_t k = c; k < classes.size(); ++k) available += static_cast<int>(classes[k].size());
    if (available < need) return;

    const std::vector<int>& members = classes[c];
    const int most = std::min(need, static_cast<int>(members.size()));
    for (int take = most; take >= 0; --take) {
      for (int k = 0; k < take; ++k) link(i, members[static_cast<std::size_t>(k)]);
      choose(i, classes, c + 1, need - take);
      for (int k = 0; k < take; ++k) unlink(i, members[static_cast<std::size_t>(k)]);
    }
  }

  /// Every later vertex can still reach degree r using vertices after i.
  bool feasible(int i) const {
    for (int j = i + 1; j < n_; ++j) {
      if (r_ - deg(j) > n_ - i - 2) return false;
    }
    return true;
  }

  void record() {
    const CanonicalForm cf = canonical_form(g_);
    if (found_.count(cf.code) != 0) return;
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (std::size_t p = 0; p < cf.order.size(); ++p) perm[static_cast<std::size_t>(cf.order[p])] = static_cast<int>(p);
    found_.emplace(cf.code, relabel(g_, perm));
  }

  int deg(int v) const { return deg_[static_cast<std::size_t>(v)]; }
  void link(int a, int b) {
    g_.add_edge(a, b);
    ++deg_[static_cast<std::size_t>(a)];
    ++deg_[static_cast<std::size_t>(b)];
  }
  void unlink(int a, int b) {
    g_.remove_edge(a, b);
    --deg_[static_cast<std::size_t>(a)];
    --deg_[static_cast<std::size_t>(b)];
  }

  int n_;
  int r_;
  Graph g_;
  std::vector<int> deg_;
  std::map<Code, Graph> found_;
};

std::vector<std::pair<int, int>> cospectral_pairs(const std::vector<Graph>& graphs) {
  std::map<std::vector<Rat>, std::vector<int>> buckets;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    buckets[graph_charpoly(graphs[i], MatrixKind::A).coeffs()].push_back(static_cast<int>(i));
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [key, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Graph& g = graphs[static_cast<std::size_t>(members[a])];
        const Graph& h = graphs[static_cast<std::size_t>(members[b])];
        if (!are_isomorphic(g, h).isomorphic) pairs.emplace_back(members[a], members[b]);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

bool pairs_valid(const RegularSearchResult& res) {
  for (const Graph& g : res.graphs) {
    const auto r = is_regular(g);
    if (g.order() != res.n || !r || *r != res.r) return false;
  }
  for (const auto& [i, j] : res.pairs) {
    if (i < 0 || j < 0 || i >= static_cast<int>(res.graphs.size()) || j >= static_cast<int>(res.graphs.size())) return false;
    const Graph& g = res.graphs[static_cast<std::size_t>(i)];
    const Graph& h = res.graphs[static_cast<std::size_t>(j)];
    if (!are_cospectral_exact(g, h, MatrixKind::A) || are_isomorphic(g, h).isomorphic) return false;
  }
  return true;
}

}  // namespace

std::vector<Graph> regular_graphs(int n, int r) {
  if (n < 1 || n > 12 || r < 0 || r >= n) throw std::invalid_argument("regular_graphs needs 0 <= r < n <= 12");
  if ((n * r) % 2 != 0) return {};
  // The complement of an r-regular graph is (n-1-r)-regular; generate the sparser side.
  if (2 * r > n - 1) {
    std::vector<Graph> out;
    for (const Graph& g : RegularGenerator(n, n - 1 - r).run()) {
      const Graph c = complement(g);
      const CanonicalForm cf = canonical_form(c);
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (std::size_t p = 0; p < cf.order.size(); ++p) perm[static_cast<std::size_t>(cf.order[p])] = static_cast<int>(p);
      out.push_back(relabel(c, perm));
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
    return out;
  }
  return RegularGenerator(n, r).run();
}

RegularSearchResult find_regular_cospectral_pairs(int n, int r) {
  if (n < 1 || n > 10 || r < 0 || r >= n) throw std::invalid_argument("search needs 0 <= r < n <= 10");
  RegularSearchResult res;
  res.n = n;
  res.r = r;
  res.graphs = regular_graphs(n, r);
  res.pairs = cospectral_pairs(res.graphs);
  return res;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("SPECTRAJOIN_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "spectrajoin";
  }
  return std::filesystem::temp_directory_path() / "spectrajoin";
}

std::string search_to_json(const RegularSearchResult& result) {
  nlohmann::json j;
  j["n"] = result.n;
  j["r"] = result.r;
  j["graphs"] = nlohmann::json::array();
  for (const Graph& g : result.graphs) j["graphs"].push_back(to_graph6(g));
  j["pairs"] = nlohmann::json::array();
  for (const auto& [a, b] : result.pairs) j["pairs"].push_back({a, b});
  return j.dump();
}

RegularSearchResult search_from_json(const std::string& text) {
  RegularSearchResult res;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    res.n = j.at("n").get<int>();
    res.r = j.at("r").get<int>();
    for (const auto& g6 : j.at("graphs")) res.graphs.push_back(from_graph6(g6.get<std::string>()));
    for (const auto& p : j.at("pairs")) res.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("search cache: ") + e.what());
  }
  return res;
}

RegularSearchResult cached_regular_search(int n, int r, const std::filesystem::path& dir) {
  const std::filesystem::path file = dir / ("regular_n" + std::to_string(n) + "_r" + std::to_string(r) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      RegularSearchResult cached = search_from_json(buffer.str());
      if (cached.n == n && cached.r == r && pairs_valid(cached)) return cached;
    } catch (const std::invalid_argument&) {
      // fall through and regenerate
    }
  }
  RegularSearchResult res = find_regular_cospectral_pairs(n, r);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!ec) {
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << search_to_json(res) << '\n';
    }
    std::filesystem::rename(tmp, file, ec);
  }
  return res;
}

std::optional<std::pair<Graph, Graph>> first_regular_pair_on_ten(const std::filesystem::path& cache_dir) {
  for (int r : {3, 4, 5}) {
    const RegularSearchResult res = cached_regular_search(10, r, cache_dir);
    if (!res.pairs.empty()) {
      const auto [i, j] = res.pairs.front();
      return std::make_pair(res.graphs[static_cast<std::size_t>(i)], res.graphs[static_cast<std::size_t>(j)]);
    }
  }
  return std::nullopt;
}

}  // namespace spectrajoin
