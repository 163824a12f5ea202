#pragma once
// Canonical relabelings of small graphs. Used as cache keys so that
// isomorphic induced subgraphs share homology computations, and as the
// fast path of isomorphism checks.
//
// Scheme: iterated color refinement, then a backtracking individualization
// search over refinement-consistent orderings, taking the lexicographically
// smallest adjacency encoding. Branches whose chosen vertices are swapped by
// a transposition automorphism are skipped. Equal keys always denote
// isomorphic graphs; if the node cap trips we fall back to the raw labeling,
// which only costs cache sharing, never soundness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regsurf/graph.hpp"

namespace regsurf {

struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> bits;  // upper triangle of the relabeled adjacency, row-major

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  std::string key() const {
    std::string s;
    s.reserve(8 + bits.size() * 8);
    s.append(reinterpret_cast<const char*>(&n), sizeof(n));
    for (std::uint64_t w : bits) s.append(reinterpret_cast<const char*>(&w), sizeof(w));
    return s;
  }
};

namespace detail {

inline std::vector<std::uint64_t> encode_order(const Graph& g, const std::vector<int>& order) {
  int n = g.size();
  std::vector<std::uint64_t> bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  std::size_t t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t)
      if (g.has_edge(order[i], order[j])) bits[t / 64] |= (1ull << (t % 64));
  return bits;
}

// Lexicographic comparison of bit sequences (earlier sequence position =
// lower bit index inside each word).
inline int cmp_bitseq(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) continue;
    int l = std::countr_zero(a[k] ^ b[k]);
    return ((a[k] >> l) & 1u) ? 1 : -1;
  }
  return 0;
}

inline bool transposition_is_automorphism(const Graph& g, int u, int v) {
  return g.neighbors(u).and_not(Bits128::single(v)) ==
         g.neighbors(v).and_not(Bits128::single(u));
}

// Stable color refinement; ids are re-assigned by sorted signature order, so
// isomorphic graphs get identical color multisets.
inline void refine_colors(const Graph& g, std::vector<int>& colors) {
  int n = g.size();
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int>& s = sig[v];
      s.push_back(colors[v]);
      for (int u = g.neighbors(v).lowest(); u >= 0; u = g.neighbors(v).next(u + 1))
        s.push_back(colors[u]);
      std::sort(s.begin() + 1, s.end());
      ids.emplace(s, 0);
    }
    int k = 0;
    for (auto& [key, id] : ids) id = k++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      int c = ids[sig[v]];
      if (c != colors[v]) changed = true;
      colors[v] = c;
    }
    if (!changed) return;
  }
}

struct CanonSearch {
  const Graph& g;
  int n;
  long long nodes = 0;
  long long node_cap;
  bool capped = false;
  bool have_best = false;
  std::vector<std::uint64_t> best;

  CanonSearch(const Graph& graph, long long cap) : g(graph), n(graph.size()), node_cap(cap) {}

  void leaf(const std::vector<int>& order) {
    auto bits = encode_order(g, order);
    if (!have_best || cmp_bitseq(bits, best) < 0) {
      best = std::move(bits);
      have_best = true;
    }
  }

  void descend(const std::vector<int>& colors) {
    if (capped) return;
    if (++nodes > node_cap) {
      capped = true;
      return;
    }
    // first color class with at least two members
    int target = -1;
    {
      std::vector<int> count(n, 0);
      for (int v = 0; v < n; ++v) ++count[colors[v]];
      int best_color = -1;
      for (int v = 0; v < n; ++v)
        if (count[colors[v]] >= 2 && (best_color < 0 || colors[v] < best_color))
          best_color = colors[v];
      target = best_color;
    }
    if (target < 0) {
      // discrete: colors define the ordering
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[colors[v]] = v;
      leaf(order);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      bool dup = false;
      for (int u : tried)
        if (transposition_is_automorphism(g, u, v)) {
          dup = true;
          break;
        }
      if (dup) continue;
      tried.push_back(v);
      std::vector<int> next = colors;
      next[v] = n;  // individualize with a fresh color; refinement renumbers
      refine_colors(g, next);
      descend(next);
      if (capped) return;
    }
  }
};

}  // namespace detail

/// Canonical form; falls back to the identity labeling when the search cap
/// trips (soundness is unaffected, only cache sharing).
inline CanonicalForm canonical_form(const Graph& g, long long node_cap = 50000) {
  int n = g.size();
  if (n <= 1) return {n, {}};
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = g.degree(v);
  detail::refine_colors(g, colors);
  detail::CanonSearch search(g, node_cap);
  search.descend(colors);
  if (search.capped || !search.have_best) {
    std::vector<int> identity(n);
    for (int v = 0; v < n; ++v) identity[v] = v;
    return {n, detail::encode_order(g, identity)};
  }
  return {n, std::move(search.best)};
}

/// Exact isomorphism test by backtracking on degree-compatible assignments.
/// Independent of canonical_form.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  int n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) da[v] = a.degree(v), db[v] = b.degree(v);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // map vertices of a, highest degree first
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (da[x] != da[y]) return da[x] > da[y];
    return x < y;
  });
  std::vector<int> image(n, -1);
  Bits128 used;

  auto go = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used.test(w) || db[w] != da[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int u = order[j];
        if (a.has_edge(v, u) != b.has_edge(w, image[u])) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      used.set(w);
      if (self(self, k + 1)) return true;
      used.reset(w);
      image[v] = -1;
    }
    return false;
  };
  return go(go, 0);
}

}  // namespace regsurf
