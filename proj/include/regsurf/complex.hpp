#pragma once
// Simplicial complexes stored by their facet antichain, with faces grouped
// by cardinality computed once at construction. The void complex (no faces
// at all) and the empty complex {only the empty face} are distinct values;
// reduced homology depends on the difference.

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "regsurf/bits.hpp"
#include "regsurf/errors.hpp"
#include "regsurf/graph.hpp"
#include "regsurf/ideal.hpp"

namespace regsurf {

namespace detail {

// (s - 1) & m on 128 bits; pre: s != 0
inline Bits128 prev_submask(Bits128 s, Bits128 m) {
  if (s.lo == 0) {
    s.hi -= 1;
    s.lo = ~0ull;
  } else {
    s.lo -= 1;
  }
  return s & m;
}

}  // namespace detail

struct SimplicialComplex {
  int nvars = 0;
  std::vector<Bits128> facets;                      // maximal faces, antichain, sorted
  std::vector<std::vector<Bits128>> faces_by_size;  // [s] = all faces with s vertices

  SimplicialComplex() = default;

  SimplicialComplex(int n, std::vector<Bits128> maximal) : nvars(n), facets(std::move(maximal)) {
    for (const Bits128& f : facets)
      if (f.and_not(Bits128::first_n(n)).any())
        throw std::invalid_argument("SimplicialComplex: facet outside the vertex range");
    // keep only maximal faces
    std::sort(facets.begin(), facets.end(), Bits128::support_less);
    std::vector<Bits128> keep;
    for (auto it = facets.rbegin(); it != facets.rend(); ++it) {
      bool covered = false;
      for (const Bits128& k : keep)
        if (it->is_subset_of(k)) {
          covered = true;
          break;
        }
      if (!covered) keep.push_back(*it);
    }
    std::sort(keep.begin(), keep.end(), Bits128::support_less);
    facets = std::move(keep);
    build_faces();
  }

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex empty_complex(int n) { return SimplicialComplex(n, {Bits128::zero()}); }
  static SimplicialComplex full_simplex(int n) {
    return SimplicialComplex(n, {Bits128::first_n(n)});
  }

  bool is_void() const { return facets.empty(); }
  bool is_empty_complex() const { return facets.size() == 1 && facets[0].none(); }

  /// Dimension; -1 for the empty complex, -2 for the void complex.
  int dim() const {
    if (is_void()) return -2;
    return static_cast<int>(faces_by_size.size()) - 2;
  }

  bool is_face(Bits128 f) const {
    for (const Bits128& m : facets)
      if (f.is_subset_of(m)) return true;
    return false;
  }

  long long face_count(int size) const {
    if (size < 0 || size >= static_cast<int>(faces_by_size.size())) return 0;
    return static_cast<long long>(faces_by_size[size].size());
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.nvars == b.nvars && a.facets == b.facets;
  }

 private:
  void build_faces() {
    if (facets.empty()) return;
    std::unordered_set<Bits128, Bits128Hash> seen;
    int maxsz = 0;
    for (const Bits128& f : facets) maxsz = std::max(maxsz, f.count());
    faces_by_size.assign(maxsz + 1, {});
    for (const Bits128& f : facets) {
      Bits128 s = f;
      for (;;) {
        if (seen.insert(s).second) faces_by_size[s.count()].push_back(s);
        if (s.none()) break;
        s = detail::prev_submask(s, f);
      }
    }
    for (auto& level : faces_by_size)
      std::sort(level.begin(), level.end(), Bits128::value_less);
  }
};

/// Faces are exactly the subsets supporting no generator; facets are the
/// complements of minimal hitting sets of the generator supports.
inline SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& i) {
  std::vector<Bits128> transversals = {Bits128::zero()};
  for (const Bits128& g : i.gens) {
    std::vector<Bits128> next;
    for (const Bits128& t : transversals) {
      if (t.intersects(g)) {
        next.push_back(t);
      } else {
        for (int v = g.lowest(); v >= 0; v = g.next(v + 1)) next.push_back(t | Bits128::single(v));
      }
    }
    // minimalize the antichain
    std::sort(next.begin(), next.end(), Bits128::support_less);
    std::vector<Bits128> keep;
    for (const Bits128& t : next) {
      bool redundant = false;
      for (const Bits128& k : keep)
        if (k.is_subset_of(t)) {
          redundant = true;
          break;
        }
      if (!redundant) keep.push_back(t);
    }
    transversals = std::move(keep);
  }
  Bits128 all = Bits128::first_n(i.nvars);
  std::vector<Bits128> facets;
  facets.reserve(transversals.size());
  for (const Bits128& t : transversals) facets.push_back(all.and_not(t));
  return SimplicialComplex(i.nvars, std::move(facets));
}

/// Minimal non-faces of the complex; inverse of stanley_reisner_complex.
inline SquarefreeIdeal ideal_of_complex(const SimplicialComplex& d) {
  if (d.nvars > 25)
    throw std::invalid_argument("ideal_of_complex: supported only up to 25 vertices");
  std::vector<Bits128> gens;
  Bits128 all = Bits128::first_n(d.nvars);
  for (std::uint64_t m = 1; m < (1ull << d.nvars); ++m) {
    Bits128 s{m, 0};
    if (d.is_face(s)) continue;
    bool minimal = true;
    for (int v = s.lowest(); v >= 0 && minimal; v = s.next(v + 1))
      if (!d.is_face(s.and_not(Bits128::single(v)))) minimal = false;
    if (minimal) gens.push_back(s);
  }
  (void)all;
  return SquarefreeIdeal(d.nvars, std::move(gens));
}

namespace detail {

// Bron-Kerbosch with pivoting; collects maximal cliques that contain r.
inline void maximal_cliques(const Graph& g, Bits128 r, Bits128 p, Bits128 x,
                            std::vector<Bits128>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  Bits128 px = p | x;
  int pivot = px.lowest();
  int best = -1;
  for (int u = px.lowest(); u >= 0; u = px.next(u + 1)) {
    int c = (g.neighbors(u) & p).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  Bits128 cand = p.and_not(g.neighbors(pivot));
  for (int v = cand.lowest(); v >= 0; v = cand.next(v + 1)) {
    maximal_cliques(g, r | Bits128::single(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace detail

/// Faces are the cliques of g.
inline SimplicialComplex clique_complex(const Graph& g) {
  std::vector<Bits128> out;
  detail::maximal_cliques(g, Bits128::zero(), g.vertex_mask(), Bits128::zero(), out);
  return SimplicialComplex(g.size(), std::move(out));
}

/// Faces are the independent sets of g; equals the clique complex of the
/// complement.
inline SimplicialComplex independence_complex(const Graph& g) {
  return clique_complex(complement(g));
}

/// Faces of d contained in w (same ambient vertex count).
inline SimplicialComplex restrict_complex(const SimplicialComplex& d, Bits128 w) {
  if (d.is_void()) return SimplicialComplex::void_complex(d.nvars);
  std::vector<Bits128> facets;
  facets.reserve(d.facets.size());
  for (const Bits128& f : d.facets) facets.push_back(f & w);
  return SimplicialComplex(d.nvars, std::move(facets));
}

/// Join on disjoint vertex blocks: b's vertices are shifted past a's.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  int n = a.nvars + b.nvars;
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(n);
  std::vector<Bits128> facets;
  for (const Bits128& fa : a.facets)
    for (const Bits128& fb : b.facets) {
      Bits128 shifted;
      for (int v = fb.lowest(); v >= 0; v = fb.next(v + 1)) shifted.set(v + a.nvars);
      facets.push_back(fa | shifted);
    }
  return SimplicialComplex(n, std::move(facets));
}

struct EulerCharacteristic {
  long long plain = 0;    // over faces of dimension >= 0
  long long reduced = 0;  // includes the empty face; 0 for the void complex
};

inline EulerCharacteristic euler_characteristic(const SimplicialComplex& d) {
  EulerCharacteristic e;
  for (int s = 1; s < static_cast<int>(d.faces_by_size.size()); ++s)
    e.plain += (s % 2 == 1 ? 1 : -1) * d.face_count(s);
  e.reduced = d.is_void() ? 0 : e.plain - 1;
  return e;
}

/// Text format: first line "n", then one facet per line as space-separated
/// vertex indices; an empty facet is written as a lone "-".
inline SimplicialComplex parse_complex(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("complex: missing vertex count line");
  int n = -1;
  try {
    n = std::stoi(line);
  } catch (...) {
    throw parse_error("complex: bad vertex count: " + line);
  }
  if (n < 0 || n > Bits128::capacity) throw parse_error("complex: vertex count out of range");
  std::vector<Bits128> facets;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "-") {
      facets.push_back(Bits128::zero());
      continue;
    }
    std::istringstream ls(line);
    Bits128 f;
    long v;
    while (ls >> v) {
      if (v < 0 || v >= n) throw parse_error("complex: vertex index out of range: " + line);
      f.set(static_cast<int>(v));
    }
    facets.push_back(f);
  }
  return SimplicialComplex(n, std::move(facets));
}

inline SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

inline std::string format_complex(const SimplicialComplex& d) {
  std::ostringstream out;
  out << d.nvars << "\n";
  for (const Bits128& f : d.facets) {
    if (f.none()) {
      out << "-\n";
      continue;
    }
    bool first = true;
    for (int v = f.lowest(); v >= 0; v = f.next(v + 1)) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace regsurf
