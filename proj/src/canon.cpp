// Canonical labelling by equitable partition refinement plus an individualize-refine
// search tree, pruned with the automorphisms discovered along the way.

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "spectrajoin/graph.hpp"

namespace spectrajoin {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;
using Code = std::vector<std::uint64_t>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), words_(g.words_per_row()) {}

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) return out;
    Partition p;
    p.emplace_back(static_cast<std::size_t>(n_));
    std::iota(p[0].begin(), p[0].end(), 0);
    refine(p);
    std::vector<int> prefix;
    search(std::move(p), prefix);
    out.order = best_order_;
    out.code = best_code_;
    return out;
  }

 private:
  int count_in(int v, const std::vector<std::uint64_t>& mask) const {
    const std::uint64_t* r = g_.row(v);
    int c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(r[w] & mask[w]);
    return c;
  }

  void refine(Partition& p) const {
    std::vector<std::uint64_t> mask(words_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int v : p[s]) mask[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (p[c].size() == 1) continue;
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(p[c].size());
          for (int v : p[c]) keyed.emplace_back(count_in(v, mask), v);
          std::sort(keyed.begin(), keyed.end());
          if (keyed.front().first == keyed.back().first) continue;
          Partition pieces;
          for (std::size_t k = 0; k < keyed.size(); ++k) {
            if (k == 0 || keyed[k].first != keyed[k - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[k].second);
          }
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  Code code_of(const std::vector<int>& order) const {
    Code code(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (g_.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) {
          code[static_cast<std::size_t>(i) * words_ + (static_cast<std::size_t>(j) >> 6)] |= std::uint64_t{1}
                                                                                            << (j & 63);
        }
      }
    }
    return code;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (std::size_t p = 0; p < from.size(); ++p) {
      gamma[static_cast<std::size_t>(from[p])] = to[p];
      identity = identity && from[p] == to[p];
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  void leaf(const Partition& p) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (const auto& cell : p) order.push_back(cell.front());
    Code code = code_of(order);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_order_ = best_order_ = order;
      first_code_ = best_code_ = std::move(code);
      return;
    }
    if (code == first_code_) {
      record_automorphism(first_order_, order);
    } else if (code == best_code_) {
      record_automorphism(best_order_, order);
    } else if (code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    }
  }

  int find(std::vector<int>& parent, int v) const {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }

  /// Orbit representatives under the generators that fix every prefix vertex.
  std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(parent, v);
        const int b = find(parent, gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(parent, v);
    return parent;
  }

  void search(Partition p, std::vector<int>& prefix) {
    auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      leaf(p);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - p.begin());
    Cell candidates = p[t];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored_roots;
    for (int v : candidates) {
      if (!explored_roots.empty()) {
        const std::vector<int> orbit = stabilizer_orbits(prefix);
        const int root = orbit[static_cast<std::size_t>(v)];
        bool seen = false;
        for (int w : explored_roots) seen = seen || orbit[static_cast<std::size_t>(w)] == root;
        if (seen) continue;
      }
      explored_roots.push_back(v);
      Partition child = p;
      Cell rest;
      for (int w : child[t]) {
        if (w != v) rest.push_back(w);
      }
      child[t] = Cell{v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(t) + 1, std::move(rest));
      refine(child);
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  std::size_t words_;
  bool have_leaf_ = false;
  std::vector<int> first_order_;
  std::vector<int> best_order_;
  Code first_code_;
  Code best_code_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& witness) {
  const int n = g.order();
  if (h.order() != n || static_cast<int>(witness.size()) != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : witness) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j) != h.adjacent(witness[static_cast<std::size_t>(i)], witness[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

IsomorphismResult are_isomorphic(const Graph& g, const Graph& h) {
  IsomorphismResult result;
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return result;
  std::vector<int> dg = g.degrees();
  std::vector<int> dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return result;

  const CanonicalForm cg = canonical_form(g);
  const CanonicalForm ch = canonical_form(h);
  if (cg.code != ch.code) return result;
  std::vector<int> witness(static_cast<std::size_t>(g.order()));
  for (std::size_t p = 0; p < cg.order.size(); ++p) witness[static_cast<std::size_t>(cg.order[p])] = ch.order[p];
  if (!is_isomorphism(g, h, witness)) throw std::logic_error("canonical labelling produced an invalid witness");
  result.isomorphic = true;
  result.witness = std::move(witness);
  return result;
}

}  // namespace spectrajoin
