#pragma once
// Finite simple graphs on up to 128 vertices, stored as symmetric adjacency
// bit masks, together with the transforms and predicates the rest of the
// library is built from.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regsurf/bits.hpp"

namespace regsurf {

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > Bits128::capacity)
      throw std::invalid_argument("Graph: vertex count must be in [0,128]");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int size() const { return n_; }

  bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].reset(v);
    adj_[v].reset(u);
  }

  const Bits128& neighbors(int v) const { return adj_[v]; }
  Bits128 closed_neighborhood(int v) const { return adj_[v] | Bits128::single(v); }
  int degree(int v) const { return adj_[v].count(); }

  Bits128 vertex_mask() const { return Bits128::first_n(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
    return out;
  }

  int edge_count() const {
    int s = 0;
    for (int u = 0; u < n_; ++u) s += adj_[u].count();
    return s / 2;
  }

  std::string label(int v) const {
    if (v < static_cast<int>(labels_.size()) && !labels_[v].empty()) return labels_[v];
    return "x" + std::to_string(v + 1);
  }
  void set_label(int v, std::string name) {
    check_vertex(v);
    if (static_cast<int>(labels_.size()) < n_) labels_.resize(n_);
    labels_[v] = std::move(name);
  }
  bool has_custom_labels() const { return !labels_.empty(); }

  /// Equality ignores labels: a graph is its adjacency structure.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

  /// Symmetry, irreflexivity and the high-bit invariant.
  void validate() const {
    Bits128 allowed = vertex_mask();
    for (int v = 0; v < n_; ++v) {
      if (adj_[v].test(v)) throw std::logic_error("Graph: loop at vertex " + std::to_string(v));
      if (adj_[v].and_not(allowed).any())
        throw std::logic_error("Graph: adjacency bits beyond vertex count");
      for (int u = adj_[v].lowest(); u >= 0; u = adj_[v].next(u + 1))
        if (!adj_[u].test(v)) throw std::logic_error("Graph: asymmetric adjacency");
    }
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
  }

  int n_ = 0;
  std::vector<Bits128> adj_;
  std::vector<std::string> labels_;
};

inline Graph complement(const Graph& g) {
  int n = g.size();
  Graph c(n);
  Bits128 all = g.vertex_mask();
  for (int v = 0; v < n; ++v) {
    Bits128 row = all.and_not(g.neighbors(v) | Bits128::single(v));
    for (int u = row.lowest(); u >= 0; u = row.next(u + 1))
      if (u > v) c.add_edge(v, u);
  }
  for (int v = 0; v < n; ++v)
    if (g.has_custom_labels()) c.set_label(v, g.label(v));
  return c;
}

/// Cross edges of the bipartition (part, V \ part) that are absent from g.
/// The bipartition must be proper: no edge inside either class.
inline Graph bipartite_complement(const Graph& g, Bits128 part) {
  int n = g.size();
  if (part.and_not(g.vertex_mask()).any())
    throw std::invalid_argument("bipartite_complement: part is not a vertex subset");
  Bits128 other = g.vertex_mask().and_not(part);
  for (int v = 0; v < n; ++v) {
    Bits128 side = part.test(v) ? part : other;
    Bits128 bad = g.neighbors(v) & side;
    if (bad.any())
      throw std::invalid_argument("bipartite_complement: edge {" + g.label(v) + "," +
                                  g.label(bad.lowest()) + "} lies inside one class");
  }
  Graph bc(n);
  for (int v = part.lowest(); v >= 0; v = part.next(v + 1)) {
    Bits128 missing = other.and_not(g.neighbors(v));
    for (int u = missing.lowest(); u >= 0; u = missing.next(u + 1)) bc.add_edge(v, u);
  }
  for (int v = 0; v < n; ++v)
    if (g.has_custom_labels()) bc.set_label(v, g.label(v));
  return bc;
}

/// Induced subgraph on w, reindexed to 0..|w|-1 in ascending vertex order.
/// old_of, when given, receives the original index of each new vertex.
inline Graph induced_subgraph(const Graph& g, Bits128 w, std::vector<int>* old_of = nullptr) {
  if (w.and_not(g.vertex_mask()).any())
    throw std::invalid_argument("induced_subgraph: w is not a vertex subset");
  std::vector<int> verts = w.to_indices();
  Graph h(static_cast<int>(verts.size()));
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    h.set_label(i, g.label(verts[i]));
    for (int j = i + 1; j < static_cast<int>(verts.size()); ++j)
      if (g.has_edge(verts[i], verts[j])) h.add_edge(i, j);
  }
  if (old_of) *old_of = std::move(verts);
  return h;
}

inline Graph delete_vertex(const Graph& g, int x) {
  return induced_subgraph(g, g.vertex_mask().and_not(Bits128::single(x)));
}

/// Induced subgraph on the vertices outside the closed neighborhood of x.
inline Graph nonneighborhood_subgraph(const Graph& g, int x) {
  return induced_subgraph(g, g.vertex_mask().and_not(g.closed_neighborhood(x)));
}

/// Contract edge {a,b}: the merged vertex is placed last and is adjacent to
/// (N(a) u N(b)) \ {a,b}. The result stays simple.
inline Graph contract_edge(const Graph& g, int a, int b) {
  if (!g.has_edge(a, b)) throw std::invalid_argument("contract_edge: {a,b} is not an edge");
  Bits128 ab = Bits128::single(a) | Bits128::single(b);
  std::vector<int> rest = g.vertex_mask().and_not(ab).to_indices();
  int m = static_cast<int>(rest.size());
  Graph h(m + 1);
  for (int i = 0; i < m; ++i) {
    h.set_label(i, g.label(rest[i]));
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(rest[i], rest[j])) h.add_edge(i, j);
  }
  Bits128 merged_adj = (g.neighbors(a) | g.neighbors(b)).and_not(ab);
  for (int i = 0; i < m; ++i)
    if (merged_adj.test(rest[i])) h.add_edge(i, m);
  h.set_label(m, g.label(a) + "+" + g.label(b));
  return h;
}

/// Connected component of `start` inside `within`.
inline Bits128 component_of(const Graph& g, int start, Bits128 within) {
  Bits128 comp = Bits128::single(start);
  Bits128 frontier = comp;
  while (frontier.any()) {
    Bits128 next;
    for (int v = frontier.lowest(); v >= 0; v = frontier.next(v + 1))
      next |= g.neighbors(v) & within;
    frontier = next.and_not(comp);
    comp |= frontier;
  }
  return comp;
}

inline std::vector<Bits128> components_within(const Graph& g, Bits128 within) {
  std::vector<Bits128> comps;
  Bits128 left = within;
  while (left.any()) {
    Bits128 c = component_of(g, left.lowest(), within);
    comps.push_back(c);
    left = left.and_not(c);
  }
  return comps;
}

inline std::vector<Bits128> connected_components(const Graph& g) {
  return components_within(g, g.vertex_mask());
}

/// One component or fewer vertices than two. The empty graph counts as
/// connected by convention.
inline bool is_connected(const Graph& g) {
  if (g.size() <= 1) return true;
  return component_of(g, 0, g.vertex_mask()).count() == g.size();
}

/// Chordality by maximum cardinality search followed by the perfect
/// elimination ordering check.
inline bool is_chordal(const Graph& g) {
  int n = g.size();
  if (n <= 3) return true;
  std::vector<int> mcs;
  mcs.reserve(n);
  Bits128 numbered;
  std::vector<int> weight(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered.test(v) && (best < 0 || weight[v] > weight[best])) best = v;
    mcs.push_back(best);
    numbered.set(best);
    Bits128 nb = g.neighbors(best).and_not(numbered);
    for (int v = nb.lowest(); v >= 0; v = nb.next(v + 1)) ++weight[v];
  }
  // Elimination order is the reverse of the MCS selection order.
  std::vector<int> pos(n);
  std::vector<int> elim(mcs.rbegin(), mcs.rend());
  for (int i = 0; i < n; ++i) pos[elim[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = elim[i];
    Bits128 later;
    for (int u = g.neighbors(v).lowest(); u >= 0; u = g.neighbors(v).next(u + 1))
      if (pos[u] > i) later.set(u);
    if (later.count() < 2) continue;
    int parent = -1;
    for (int u = later.lowest(); u >= 0; u = later.next(u + 1))
      if (parent < 0 || pos[u] < pos[parent]) parent = u;
    if (!later.and_not(Bits128::single(parent)).is_subset_of(g.neighbors(parent))) return false;
  }
  return true;
}

/// Some induced cycle of length >= minlen, as a vertex list in cycle order,
/// or nullopt. minlen must be at least 3.
inline std::optional<std::vector<int>> induced_long_cycle(const Graph& g, int minlen) {
  if (minlen < 3) throw std::invalid_argument("induced_long_cycle: minlen must be >= 3");
  int n = g.size();
  std::vector<int> path;
  Bits128 mask;
  std::optional<std::vector<int>> found;

  auto dfs = [&](auto&& self, int s) -> bool {
    int v = path.back();
    Bits128 cand = g.neighbors(v).and_not(mask);
    for (int u = cand.next(s + 1); u >= 0; u = cand.next(u + 1)) {
      Bits128 back = g.neighbors(u) & mask;
      Bits128 just_v = Bits128::single(v);
      if (back == just_v) {
        path.push_back(u);
        mask.set(u);
        if (self(self, s)) return true;
        mask.reset(u);
        path.pop_back();
      } else if (back == (just_v | Bits128::single(s)) &&
                 static_cast<int>(path.size()) + 1 >= minlen) {
        path.push_back(u);
        found = path;
        path.pop_back();
        return true;
      }
    }
    return false;
  };

  for (int s = 0; s + minlen <= n; ++s) {
    path.assign(1, s);
    mask = Bits128::single(s);
    if (dfs(dfs, s)) return found;
  }
  return std::nullopt;
}

/// A set U is an anticycle when the complement of the induced subgraph on U
/// is an induced cycle of length >= 4; equivalently the complement of g has
/// an induced cycle of that length.
inline bool has_anticycle(const Graph& g) {
  return induced_long_cycle(complement(g), 4).has_value();
}

namespace detail {

inline int matching_search(const Graph& g, Bits128 remaining, int current, int& best) {
  // Active vertices still able to contribute an edge.
  int active = 0;
  int pivot = -1;
  for (int v = remaining.lowest(); v >= 0; v = remaining.next(v + 1))
    if ((g.neighbors(v) & remaining).any()) {
      ++active;
      if (pivot < 0) pivot = v;
    }
  if (pivot < 0) {
    best = std::max(best, current);
    return current;
  }
  if (current + active / 2 <= best) return best;  // bound: each edge uses two actives
  int out = current;
  Bits128 nb = g.neighbors(pivot) & remaining;
  for (int u = nb.lowest(); u >= 0; u = nb.next(u + 1)) {
    Bits128 rest = remaining.and_not(Bits128::single(pivot) | Bits128::single(u));
    out = std::max(out, matching_search(g, rest, current + 1, best));
  }
  // pivot left unmatched
  out = std::max(out, matching_search(g, remaining.and_not(Bits128::single(pivot)), current, best));
  return out;
}

}  // namespace detail

/// Exact maximum matching size.
inline int matching_number(const Graph& g) {
  // Greedy maximal matching seeds the bound.
  int best = 0;
  Bits128 used;
  for (auto [u, v] : g.edges())
    if (!used.test(u) && !used.test(v)) {
      used.set(u);
      used.set(v);
      ++best;
    }
  return detail::matching_search(g, g.vertex_mask(), 0, best);
}

/// Exact maximum induced matching size: a matching whose endpoints induce
/// exactly that matching.
inline int induced_matching_number(const Graph& g) {
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  std::vector<Bits128> closed(m);  // endpoints plus all their neighbors
  for (int i = 0; i < m; ++i)
    closed[i] = g.closed_neighborhood(edges[i].first) | g.closed_neighborhood(edges[i].second);
  int best = 0;
  std::vector<int> cand(m);
  for (int i = 0; i < m; ++i) cand[i] = i;

  auto go = [&](auto&& self, const std::vector<int>& cs, int current) -> void {
    if (current + static_cast<int>(cs.size()) <= best) return;
    if (cs.empty()) {
      best = std::max(best, current);
      return;
    }
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (current + static_cast<int>(cs.size() - k) <= best) break;
      int e = cs[k];
      Bits128 ends = Bits128::single(edges[e].first) | Bits128::single(edges[e].second);
      std::vector<int> next;
      for (std::size_t j = k + 1; j < cs.size(); ++j) {
        int f = cs[j];
        Bits128 fe = Bits128::single(edges[f].first) | Bits128::single(edges[f].second);
        // compatible: f's endpoints untouched by e's closed neighborhoods and
        // vice versa (no shared vertex, no cross edge)
        if (!fe.intersects(closed[e]) && !ends.intersects(closed[f])) next.push_back(f);
      }
      self(self, next, current + 1);
    }
    best = std::max(best, current);
  };
  go(go, cand, 0);
  return best;
}

}  // namespace regsurf
