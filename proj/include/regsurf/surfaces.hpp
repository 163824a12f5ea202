#pragma once
// Triangulated closed 2-manifolds: recognition (edge condition, vertex
// links, connectivity), orientability by sign propagation over the dual
// graph, classification by Euler characteristic, a catalog of minimal
// triangulations, and a backtracking search for closed-surface subsets of a
// triangle pool.

#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "regsurf/complex.hpp"
#include "regsurf/graph.hpp"

namespace regsurf {

struct PureTwoComplex {
  int nverts = 0;
  std::vector<std::array<int, 3>> triangles;  // each ascending; list sorted, deduplicated

  PureTwoComplex() = default;

  PureTwoComplex(int n, std::vector<std::array<int, 3>> tris) : nverts(n), triangles(std::move(tris)) {
    for (auto& t : triangles) {
      std::sort(t.begin(), t.end());
      if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("PureTwoComplex: degenerate triangle");
      if (t[0] < 0 || t[2] >= n)
        throw std::invalid_argument("PureTwoComplex: vertex index out of range");
    }
    std::sort(triangles.begin(), triangles.end());
    triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
  }

  Bits128 used_vertices() const {
    Bits128 u;
    for (const auto& t : triangles)
      for (int v : t) u.set(v);
    return u;
  }

  SimplicialComplex as_complex() const {
    std::vector<Bits128> facets;
    facets.reserve(triangles.size());
    for (const auto& t : triangles)
      facets.push_back(Bits128::single(t[0]) | Bits128::single(t[1]) | Bits128::single(t[2]));
    return SimplicialComplex(nverts, std::move(facets));
  }

  friend bool operator==(const PureTwoComplex&, const PureTwoComplex&) = default;
};

/// All 3-cliques of g, as the triangle pool of its clique complex.
inline PureTwoComplex triangles_of_clique_complex(const Graph& g) {
  std::vector<std::array<int, 3>> tris;
  for (int a = 0; a < g.size(); ++a) {
    Bits128 na = g.neighbors(a);
    for (int b = na.next(a + 1); b >= 0; b = na.next(b + 1)) {
      Bits128 common = na & g.neighbors(b);
      for (int c = common.next(b + 1); c >= 0; c = common.next(c + 1)) tris.push_back({a, b, c});
    }
  }
  return PureTwoComplex(g.size(), std::move(tris));
}

struct VertexLink {
  Graph graph;             // on the link vertices, reindexed ascending
  std::vector<int> verts;  // original index of each link vertex
  bool isolated = false;   // v appears in no triangle
};

/// Link of v: one edge {a,b} per triangle {v,a,b}.
inline VertexLink vertex_link(const PureTwoComplex& t, int v) {
  std::set<int> vs;
  for (const auto& tr : t.triangles)
    if (tr[0] == v || tr[1] == v || tr[2] == v)
      for (int u : tr)
        if (u != v) vs.insert(u);
  VertexLink link;
  link.verts.assign(vs.begin(), vs.end());
  link.isolated = link.verts.empty();
  link.graph = Graph(static_cast<int>(link.verts.size()));
  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(link.verts.size()); ++i) {
    pos[link.verts[i]] = i;
    link.graph.set_label(i, "x" + std::to_string(link.verts[i] + 1));
  }
  for (const auto& tr : t.triangles)
    if (tr[0] == v || tr[1] == v || tr[2] == v) {
      std::vector<int> rest;
      for (int u : tr)
        if (u != v) rest.push_back(u);
      link.graph.add_edge(pos[rest[0]], pos[rest[1]]);
    }
  return link;
}

struct SurfaceCertificate {
  PureTwoComplex triangles;
  bool orientable = false;
  std::vector<std::int8_t> orientation;  // per-triangle sign when orientable
  int euler = 0;
  int genus = 0;
  std::string label;

  std::string to_json() const {
    std::ostringstream out;
    out << "{\"triangles\":[";
    for (std::size_t i = 0; i < triangles.triangles.size(); ++i) {
      const auto& t = triangles.triangles[i];
      if (i) out << ",";
      out << "[" << t[0] << "," << t[1] << "," << t[2] << "]";
    }
    out << "],\"orientable\":" << (orientable ? "true" : "false") << ",\"euler\":" << euler
        << ",\"genus\":" << genus << ",\"label\":\"" << label << "\"}";
    return out.str();
  }
};

enum class SurfaceDefect { none, bad_edge, pinched_vertex, disconnected };

inline const char* to_string(SurfaceDefect d) {
  switch (d) {
    case SurfaceDefect::none:
      return "none";
    case SurfaceDefect::bad_edge:
      return "bad-edge";
    case SurfaceDefect::pinched_vertex:
      return "pinched-vertex";
    case SurfaceDefect::disconnected:
      return "disconnected";
  }
  return "?";
}

struct SurfaceCheck {
  std::optional<SurfaceCertificate> certificate;
  SurfaceDefect defect = SurfaceDefect::none;
};

struct OrientabilityResult {
  bool orientable = false;
  std::vector<std::int8_t> orientation;    // per-triangle sign when orientable
  std::vector<int> obstruction_triangles;  // odd dual cycle otherwise
};

namespace detail {

inline std::pair<int, int> edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Sign of traversal of edge e by the ascending orientation of triangle t:
// +1 for the first and second boundary edges, -1 for the closing edge.
inline int edge_sign(const std::array<int, 3>& t, std::pair<int, int> e) {
  if (e == edge_key(t[0], t[1]) || e == edge_key(t[1], t[2])) return 1;
  return -1;
}

inline std::map<std::pair<int, int>, std::vector<int>> edge_incidence(const PureTwoComplex& t) {
  std::map<std::pair<int, int>, std::vector<int>> inc;
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i) {
    const auto& tr = t.triangles[i];
    inc[edge_key(tr[0], tr[1])].push_back(i);
    inc[edge_key(tr[0], tr[2])].push_back(i);
    inc[edge_key(tr[1], tr[2])].push_back(i);
  }
  return inc;
}

// Sign propagation over the dual graph. Requires every edge in <= 2
// triangles; the complex need not be closed.
inline OrientabilityResult propagate_orientation(const PureTwoComplex& t) {
  auto inc = edge_incidence(t);
  int m = static_cast<int>(t.triangles.size());
  OrientabilityResult res;
  res.orientation.assign(m, 0);
  std::vector<int> parent(m, -1);
  for (int start = 0; start < m; ++start) {
    if (res.orientation[start] != 0) continue;
    res.orientation[start] = 1;
    std::vector<int> queue{start};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int cur = queue[q];
      const auto& tr = t.triangles[cur];
      for (auto e : {edge_key(tr[0], tr[1]), edge_key(tr[0], tr[2]), edge_key(tr[1], tr[2])}) {
        for (int other : inc[e]) {
          if (other == cur) continue;
          // consistent: s_cur * sign_cur = -(s_other * sign_other)
          int needed = -res.orientation[cur] * edge_sign(tr, e) * edge_sign(t.triangles[other], e);
          if (res.orientation[other] == 0) {
            res.orientation[other] = static_cast<std::int8_t>(needed);
            parent[other] = cur;
            queue.push_back(other);
          } else if (res.orientation[other] != needed) {
            // odd cycle: tree path cur -> root, then root -> other, closed by e
            std::vector<int> up, down;
            for (int a = cur; a >= 0; a = parent[a]) up.push_back(a);
            for (int b = other; b >= 0; b = parent[b]) down.push_back(b);
            // trim common tail
            while (up.size() > 1 && down.size() > 1 && up[up.size() - 2] == down[down.size() - 2]) {
              up.pop_back();
              down.pop_back();
            }
            res.orientable = false;
            res.obstruction_triangles = up;
            for (auto it = down.rbegin(); it != down.rend(); ++it)
              if (*it != up.back() || it != down.rbegin())
                res.obstruction_triangles.push_back(*it);
            res.orientation.clear();
            return res;
          }
        }
      }
    }
  }
  res.orientable = true;
  return res;
}

}  // namespace detail

/// Sign assignment making adjacent triangles induce opposite directions on
/// every shared edge, or a dual cycle witnessing the obstruction. The input
/// must already satisfy the closed-surface edge and link conditions.
inline OrientabilityResult orientability(const PureTwoComplex& t) {
  auto inc = detail::edge_incidence(t);
  for (const auto& [e, tris] : inc)
    if (tris.size() != 2)
      throw std::invalid_argument("orientability: input is not edge-closed");
  for (int v = t.used_vertices().lowest(); v >= 0; v = t.used_vertices().next(v + 1)) {
    VertexLink link = vertex_link(t, v);
    bool cycle = link.graph.size() >= 3 && is_connected(link.graph);
    for (int u = 0; cycle && u < link.graph.size(); ++u)
      if (link.graph.degree(u) != 2) cycle = false;
    if (!cycle) throw std::invalid_argument("orientability: a vertex link is not a cycle");
  }
  return detail::propagate_orientation(t);
}

/// Certificate iff every edge lies in exactly two triangles, every vertex
/// link is a single cycle, and the dual graph is connected.
inline SurfaceCheck is_closed_surface(const PureTwoComplex& t) {
  if (t.triangles.empty())
    throw std::invalid_argument("is_closed_surface: empty triangle set");
  SurfaceCheck out;
  auto inc = detail::edge_incidence(t);
  for (const auto& [e, tris] : inc)
    if (tris.size() != 2) {
      out.defect = SurfaceDefect::bad_edge;
      return out;
    }
  Bits128 used = t.used_vertices();
  for (int v = used.lowest(); v >= 0; v = used.next(v + 1)) {
    VertexLink link = vertex_link(t, v);
    bool cycle = link.graph.size() >= 3 && is_connected(link.graph);
    for (int u = 0; cycle && u < link.graph.size(); ++u)
      if (link.graph.degree(u) != 2) cycle = false;
    if (!cycle) {
      out.defect = SurfaceDefect::pinched_vertex;
      return out;
    }
  }
  // dual connectivity
  {
    int m = static_cast<int>(t.triangles.size());
    std::vector<char> seen(m, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto& tr = t.triangles[queue[q]];
      for (auto e : {detail::edge_key(tr[0], tr[1]), detail::edge_key(tr[0], tr[2]),
                     detail::edge_key(tr[1], tr[2])})
        for (int other : inc[e])
          if (!seen[other]) {
            seen[other] = 1;
            ++reached;
            queue.push_back(other);
          }
    }
    if (reached != m) {
      out.defect = SurfaceDefect::disconnected;
      return out;
    }
  }

  SurfaceCertificate cert;
  cert.triangles = t;
  auto orient = detail::propagate_orientation(t);
  cert.orientable = orient.orientable;
  cert.orientation = orient.orientation;
  int V = used.count();
  int E = static_cast<int>(inc.size());
  int F = static_cast<int>(t.triangles.size());
  cert.euler = V - E + F;
  if (cert.orientable) {
    cert.genus = (2 - cert.euler) / 2;
    cert.label = cert.genus == 0 ? "sphere" : "orientable-genus-" + std::to_string(cert.genus);
  } else {
    cert.genus = 2 - cert.euler;
    cert.label = "nonorientable-genus-" + std::to_string(cert.genus);
  }
  out.certificate = std::move(cert);
  return out;
}

/// Minimal triangulations used as fixtures and anchors; each entry is
/// re-validated on construction.
inline std::vector<std::pair<std::string, PureTwoComplex>> catalog() {
  std::vector<std::pair<std::string, PureTwoComplex>> out;
  out.emplace_back("tetrahedron",
                   PureTwoComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  {
    // antipodal pairs (0,1), (2,3), (4,5); 1-skeleton K_{2,2,2}
    std::vector<std::array<int, 3>> tris;
    for (int a : {0, 1})
      for (int b : {2, 3})
        for (int c : {4, 5}) tris.push_back({a, b, c});
    out.emplace_back("octahedron", PureTwoComplex(6, std::move(tris)));
  }
  {
    // 7-vertex torus, cyclic difference construction on K7
    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < 7; ++i) {
      tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
      tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    out.emplace_back("csaszar-torus", PureTwoComplex(7, std::move(tris)));
  }
  out.emplace_back("hemi-icosahedron",
                   PureTwoComplex(6, {{0, 1, 2},
                                      {0, 2, 3},
                                      {0, 3, 4},
                                      {0, 4, 5},
                                      {0, 5, 1},
                                      {1, 2, 4},
                                      {2, 3, 5},
                                      {3, 4, 1},
                                      {4, 5, 2},
                                      {5, 1, 3}}));
  for (const auto& [name, t] : out) {
    auto check = is_closed_surface(t);
    if (!check.certificate)
      throw std::logic_error("catalog: entry '" + name + "' failed the surface check: " +
                             to_string(check.defect));
  }
  return out;
}

struct SurfaceSearchCaps {
  std::uint64_t max_nodes = 1ull << 22;
  int max_triangles = 64;
  int threads = 1;
};

enum class SearchStatus { found, none, capped };

struct SurfaceSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<SurfaceCertificate> certificate;
  std::uint64_t nodes = 0;
};

namespace detail {

struct SurfaceSearcher {
  const PureTwoComplex& pool;
  bool require_orientable;
  bool exclude_tetrahedra;
  const SurfaceSearchCaps& caps;
  std::map<std::pair<int, int>, std::vector<int>> incidence;
  std::atomic<std::uint64_t>* nodes;
  bool size_pruned = false;

  std::vector<int> chosen;
  std::map<std::pair<int, int>, int> counts;

  SurfaceSearcher(const PureTwoComplex& p, bool orient, bool no_tetra,
                  const SurfaceSearchCaps& c, std::atomic<std::uint64_t>* node_counter)
      : pool(p),
        require_orientable(orient),
        exclude_tetrahedra(no_tetra),
        caps(c),
        incidence(edge_incidence(p)),
        nodes(node_counter) {}

  struct CapHit {};

  void add(int id, int delta) {
    const auto& tr = pool.triangles[id];
    counts[edge_key(tr[0], tr[1])] += delta;
    counts[edge_key(tr[0], tr[2])] += delta;
    counts[edge_key(tr[1], tr[2])] += delta;
  }

  bool can_add(int id) const {
    const auto& tr = pool.triangles[id];
    for (auto e : {edge_key(tr[0], tr[1]), edge_key(tr[0], tr[2]), edge_key(tr[1], tr[2])}) {
      auto it = counts.find(e);
      if (it != counts.end() && it->second >= 2) return false;
    }
    return true;
  }

  std::optional<SurfaceCertificate> grow(int seed) {
    if (nodes->fetch_add(1) + 1 > caps.max_nodes) throw CapHit{};
    // first open edge
    const std::pair<int, int>* open = nullptr;
    for (const auto& [e, c] : counts)
      if (c == 1) {
        open = &e;
        break;
      }
    if (!open) {
      // closed candidate
      std::vector<std::array<int, 3>> tris;
      for (int id : chosen) tris.push_back(pool.triangles[id]);
      PureTwoComplex cand(pool.nverts, std::move(tris));
      if (exclude_tetrahedra && cand.triangles.size() == 4 && cand.used_vertices().count() == 4)
        return std::nullopt;
      auto check = is_closed_surface(cand);
      if (check.certificate && (!require_orientable || check.certificate->orientable))
        return check.certificate;
      return std::nullopt;  // closed but rejected; no extension can stay valid
    }
    if (static_cast<int>(chosen.size()) >= caps.max_triangles) {
      size_pruned = true;
      return std::nullopt;
    }
    std::pair<int, int> e = *open;
    for (int id : incidence[e]) {
      if (id <= seed) continue;  // candidates are indexed above the seed
      if (std::find(chosen.begin(), chosen.end(), id) != chosen.end()) continue;
      if (!can_add(id)) continue;
      chosen.push_back(id);
      add(id, +1);
      auto found = grow(seed);
      add(id, -1);
      chosen.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<SurfaceCertificate> from_seed(int seed) {
    chosen.assign(1, seed);
    counts.clear();
    add(seed, +1);
    return grow(seed);
  }
};

// Any six vertices carrying three disjoint pairs with all eight cross
// triangles in the pool form an octahedron; most small hits arise this way.
inline std::optional<SurfaceCertificate> octahedron_fast_path(const PureTwoComplex& pool) {
  if (pool.nverts > 24) return std::nullopt;
  std::set<std::array<int, 3>> have(pool.triangles.begin(), pool.triangles.end());
  auto tri = [&](int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return have.count(t) > 0;
  };
  std::vector<int> vs = pool.used_vertices().to_indices();
  int k = static_cast<int>(vs.size());
  if (k < 6) return std::nullopt;
  std::vector<int> idx(6);
  auto attempt = [&](const std::array<std::pair<int, int>, 3>& pairs) -> bool {
    for (int a : {pairs[0].first, pairs[0].second})
      for (int b : {pairs[1].first, pairs[1].second})
        for (int c : {pairs[2].first, pairs[2].second})
          if (!tri(a, b, c)) return false;
    return true;
  };
  // choose 6 vertices, then a perfect pairing
  std::vector<int> comb(6);
  auto run = [&](auto&& self, int start, int depth) -> std::optional<SurfaceCertificate> {
    if (depth == 6) {
      static const int pairings[15][6] = {
          {0, 1, 2, 3, 4, 5}, {0, 1, 2, 4, 3, 5}, {0, 1, 2, 5, 3, 4}, {0, 2, 1, 3, 4, 5},
          {0, 2, 1, 4, 3, 5}, {0, 2, 1, 5, 3, 4}, {0, 3, 1, 2, 4, 5}, {0, 3, 1, 4, 2, 5},
          {0, 3, 1, 5, 2, 4}, {0, 4, 1, 2, 3, 5}, {0, 4, 1, 3, 2, 5}, {0, 4, 1, 5, 2, 3},
          {0, 5, 1, 2, 3, 4}, {0, 5, 1, 3, 2, 4}, {0, 5, 1, 4, 2, 3}};
      for (const auto& p : pairings) {
        std::array<std::pair<int, int>, 3> pairs{
            std::pair<int, int>{comb[p[0]], comb[p[1]]},
            std::pair<int, int>{comb[p[2]], comb[p[3]]},
            std::pair<int, int>{comb[p[4]], comb[p[5]]}};
        if (attempt(pairs)) {
          std::vector<std::array<int, 3>> tris;
          for (int a : {pairs[0].first, pairs[0].second})
            for (int b : {pairs[1].first, pairs[1].second})
              for (int c : {pairs[2].first, pairs[2].second}) {
                std::array<int, 3> t{a, b, c};
                std::sort(t.begin(), t.end());
                tris.push_back(t);
              }
          auto check = is_closed_surface(PureTwoComplex(pool.nverts, std::move(tris)));
          if (check.certificate) return check.certificate;
        }
      }
      return std::nullopt;
    }
    for (int i = start; i < k; ++i) {
      comb[depth] = vs[i];
      if (auto r = self(self, i + 1, depth + 1)) return r;
    }
    return std::nullopt;
  };
  return run(run, 0, 0);
}

}  // namespace detail

/// Search for a subset of the pool forming a closed surface, orientable when
/// required. Growth proceeds along open edges from each seed triangle, with
/// candidate indices above the seed so each subset is explored exactly once.
/// An exhausted node or size budget yields `capped` rather than `none`.
inline SurfaceSearchResult find_surface_subcomplex(const PureTwoComplex& pool,
                                                   bool require_orientable,
                                                   const SurfaceSearchCaps& caps = {},
                                                   bool exclude_tetrahedra = false,
                                                   const std::vector<int>* seed_order = nullptr) {
  SurfaceSearchResult res;
  if (pool.triangles.empty()) return res;

  if (auto fast = detail::octahedron_fast_path(pool)) {
    res.status = SearchStatus::found;
    res.certificate = std::move(fast);
    return res;
  }

  int m = static_cast<int>(pool.triangles.size());
  std::vector<int> seeds;
  if (seed_order) {
    seeds = *seed_order;
  } else {
    seeds.resize(m);
    for (int i = 0; i < m; ++i) seeds[i] = i;
  }

  std::atomic<std::uint64_t> nodes{0};
  int threads = std::max(1, caps.threads);
  bool size_pruned = false;
  bool capped = false;

  if (threads == 1) {
    detail::SurfaceSearcher searcher(pool, require_orientable, exclude_tetrahedra, caps, &nodes);
    try {
      for (int seed : seeds) {
        auto found = searcher.from_seed(seed);
        if (found) {
          res.status = SearchStatus::found;
          res.certificate = std::move(found);
          res.nodes = nodes.load();
          return res;
        }
      }
    } catch (detail::SurfaceSearcher::CapHit&) {
      capped = true;
    }
    size_pruned = searcher.size_pruned;
  } else {
    std::atomic<int> next{0};
    std::atomic<bool> got{false};
    std::atomic<bool> cap_flag{false};
    std::mutex result_mu;
    std::optional<SurfaceCertificate> cert;
    std::atomic<bool> pruned{false};
    std::vector<std::thread> pool_threads;
    for (int tid = 0; tid < threads; ++tid)
      pool_threads.emplace_back([&]() {
        detail::SurfaceSearcher searcher(pool, require_orientable, exclude_tetrahedra, caps,
                                         &nodes);
        try {
          for (;;) {
            int k = next.fetch_add(1);
            if (k >= static_cast<int>(seeds.size()) || got.load()) return;
            auto found = searcher.from_seed(seeds[k]);
            if (searcher.size_pruned) pruned.store(true);
            if (found) {
              std::lock_guard<std::mutex> lock(result_mu);
              if (!cert) cert = std::move(found);
              got.store(true);
              return;
            }
          }
        } catch (detail::SurfaceSearcher::CapHit&) {
          cap_flag.store(true);
        }
      });
    for (auto& th : pool_threads) th.join();
    if (cert) {
      res.status = SearchStatus::found;
      res.certificate = std::move(cert);
      res.nodes = nodes.load();
      return res;
    }
    capped = cap_flag.load();
    size_pruned = pruned.load();
  }

  res.nodes = nodes.load();
  res.status = (capped || size_pruned) ? SearchStatus::capped : SearchStatus::none;
  return res;
}

}  // namespace regsurf
