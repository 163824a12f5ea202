#pragma once
// The harness: for each graph, compare the homological side (Hochster
// regularity >= 3 over the char-zero surrogate and over F2) against the
// combinatorial side (a closed-surface subcomplex in the clique complex of
// the complement, orientable for the char-zero claim), re-enact the
// inductive gadget constructions, and emit machine-readable verdicts.
//
// A complement containing a 4-clique always carries a tetrahedron-boundary
// subcomplex whose 2-cycle bounds inside the filled clique, so the literal
// predicate can fire while the regularity stays below 3. Such disagreements
// are tallied separately as degenerate; in a complement without 4-cliques
// the clique complex is at most 2-dimensional and a surface subcomplex
// forces nonvanishing H~_2, so no degenerate case can arise there.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "regsurf/betti.hpp"
#include "regsurf/canon.hpp"
#include "regsurf/graph.hpp"
#include "regsurf/graph6.hpp"
#include "regsurf/surfaces.hpp"

namespace regsurf {

inline bool has_k4(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    Bits128 common = g.neighbors(u) & g.neighbors(v);
    for (int w = common.lowest(); w >= 0; w = common.next(w + 1)) {
      Bits128 third = common & g.neighbors(w);
      if (third.next(w + 1) >= 0) return true;
    }
  }
  return false;
}

struct PredicateResult {
  std::optional<bool> value;  // nullopt = indeterminate (search budget ran out)
  std::optional<SurfaceCertificate> certificate;
  std::uint64_t nodes = 0;
};

/// Does the clique complex of the complement contain a closed-surface
/// subcomplex (orientable unless char_two)?
inline PredicateResult theorem_predicate(const Graph& g, bool char_two,
                                         const SurfaceSearchCaps& caps = {},
                                         bool exclude_tetrahedra = false) {
  PureTwoComplex pool = triangles_of_clique_complex(complement(g));
  SurfaceSearchResult res = find_surface_subcomplex(pool, !char_two, caps, exclude_tetrahedra);
  PredicateResult out;
  out.nodes = res.nodes;
  if (res.status == SearchStatus::found) {
    out.value = true;
    out.certificate = std::move(res.certificate);
  } else if (res.status == SearchStatus::none) {
    out.value = false;
  }
  return out;
}

/// Hochster side of the theorem, with early exit on the first witness subset.
inline bool reg_ge3_oracle(const Graph& g, const FieldSpec& f, const HochsterEngine& engine) {
  return engine.regularity_at_least(g, f, 3);
}

struct Verdict {
  std::string graph6;
  int n = 0;
  int reg_f0 = 0;
  int reg_f2 = 0;
  std::optional<bool> predicate_orientable;
  std::optional<bool> predicate_any_surface;
  std::optional<bool> agree_f0;  // (reg_f0 >= 3) <=> predicate_orientable, when determinate
  std::optional<bool> agree_f2;
  bool complement_has_k4 = false;
  bool degenerate_f0 = false;  // disagreement explained by a filled 4-clique
  bool degenerate_f2 = false;
  std::optional<SurfaceCertificate> certificate;
  long long elapsed_ms = 0;

  bool indeterminate() const { return !predicate_orientable || !predicate_any_surface; }
  bool disagree_nondegenerate() const {
    return (agree_f0 && !*agree_f0 && !degenerate_f0) || (agree_f2 && !*agree_f2 && !degenerate_f2);
  }

  std::string to_json(bool with_timings = false) const {
    auto tri = [](const std::optional<bool>& v) {
      return v ? (*v ? std::string("true") : std::string("false")) : std::string("\"indeterminate\"");
    };
    std::ostringstream out;
    out << "{\"graph\":\"" << graph6 << "\",\"n\":" << n << ",\"reg_f0\":" << reg_f0
        << ",\"reg_f2\":" << reg_f2 << ",\"predicate_orientable\":" << tri(predicate_orientable)
        << ",\"predicate_any_surface\":" << tri(predicate_any_surface)
        << ",\"agree_f0\":" << tri(agree_f0) << ",\"agree_f2\":" << tri(agree_f2)
        << ",\"complement_has_k4\":" << (complement_has_k4 ? "true" : "false")
        << ",\"degenerate_f0\":" << (degenerate_f0 ? "true" : "false")
        << ",\"degenerate_f2\":" << (degenerate_f2 ? "true" : "false") << ",\"certificate\":"
        << (certificate ? certificate->to_json() : std::string("null"));
    if (with_timings) out << ",\"timings\":{\"total_ms\":" << elapsed_ms << "}";
    out << "}";
    return out.str();
  }
};

inline Verdict verify_main(const Graph& g, const HochsterEngine& engine,
                           const SurfaceSearchCaps& caps = {}) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.graph6 = encode_graph6(g);
  v.n = g.size();
  v.reg_f0 = engine.regularity(g, FieldSpec::f0());
  v.reg_f2 = engine.regularity(g, FieldSpec::f2());
  PredicateResult orient = theorem_predicate(g, /*char_two=*/false, caps);
  PredicateResult any = theorem_predicate(g, /*char_two=*/true, caps);
  v.predicate_orientable = orient.value;
  v.predicate_any_surface = any.value;
  v.complement_has_k4 = has_k4(complement(g));
  if (orient.value) v.agree_f0 = ((v.reg_f0 >= 3) == *orient.value);
  if (any.value) v.agree_f2 = ((v.reg_f2 >= 3) == *any.value);
  v.degenerate_f0 = v.agree_f0 && !*v.agree_f0 && v.reg_f0 < 3 && v.complement_has_k4;
  v.degenerate_f2 = v.agree_f2 && !*v.agree_f2 && v.reg_f2 < 3 && v.complement_has_k4;
  if (orient.certificate)
    v.certificate = std::move(orient.certificate);
  else if (any.certificate)
    v.certificate = std::move(any.certificate);
  v.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return v;
}

struct CorpusFilters {
  int max_n = Bits128::capacity;  // graphs above are skipped, not errors
};

struct CorpusSummary {
  long long graphs = 0;
  long long skipped = 0;
  long long indeterminate = 0;
  long long disagreements_f0 = 0;
  long long disagreements_f2 = 0;
  long long degenerate_f0 = 0;
  long long degenerate_f2 = 0;
  std::vector<Verdict> verdicts;                          // input order
  std::vector<std::pair<long, std::string>> parse_errors;  // (line number, message)

  long long nondegenerate_f0() const { return disagreements_f0 - degenerate_f0; }
  long long nondegenerate_f2() const { return disagreements_f2 - degenerate_f2; }
  bool clean() const { return nondegenerate_f0() == 0 && nondegenerate_f2() == 0; }

  std::string to_json() const {
    std::ostringstream out;
    out << "{\"graphs\":" << graphs << ",\"skipped\":" << skipped
        << ",\"parse_errors\":" << parse_errors.size() << ",\"indeterminate\":" << indeterminate
        << ",\"disagreements_f0\":" << disagreements_f0
        << ",\"disagreements_f2\":" << disagreements_f2 << ",\"degenerate_disagreements_f0\":"
        << degenerate_f0 << ",\"degenerate_disagreements_f2\":" << degenerate_f2
        << ",\"nondegenerate_disagreements_f0\":" << nondegenerate_f0()
        << ",\"nondegenerate_disagreements_f2\":" << nondegenerate_f2()
        << ",\"nondegenerate_disagreeing_graphs\":[";
    bool first = true;
    for (const Verdict& v : verdicts)
      if (v.disagree_nondegenerate()) {
        if (!first) out << ",";
        out << "\"" << v.graph6 << "\"";
        first = false;
      }
    out << "]}";
    return out.str();
  }
};

/// One verdict per graph6 line; parse failures are recorded and the run
/// continues. Output order follows input order regardless of thread count.
inline CorpusSummary corpus_run(std::istream& in, const HochsterEngine& engine,
                                const SurfaceSearchCaps& caps = {},
                                const CorpusFilters& filters = {}, int threads = 1) {
  CorpusSummary sum;
  std::vector<std::pair<long, std::string>> lines;
  {
    std::string line;
    long no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (!line.empty()) lines.emplace_back(no, line);
    }
  }
  std::vector<std::optional<Verdict>> slots(lines.size());
  std::vector<std::pair<long, std::string>> errors;
  std::mutex err_mu;
  threads = std::max(1, threads);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= lines.size()) return;
      try {
        Graph g = parse_graph6(lines[k].second);
        if (g.size() > filters.max_n) continue;  // slot stays empty: skipped
        slots[k] = verify_main(g, engine, caps);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mu);
        errors.emplace_back(lines[k].first, e.what());
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::sort(errors.begin(), errors.end());
  sum.parse_errors = std::move(errors);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) continue;
    Verdict& v = *slots[k];
    ++sum.graphs;
    if (v.indeterminate()) ++sum.indeterminate;
    if (v.agree_f0 && !*v.agree_f0) {
      ++sum.disagreements_f0;
      if (v.degenerate_f0) ++sum.degenerate_f0;
    }
    if (v.agree_f2 && !*v.agree_f2) {
      ++sum.disagreements_f2;
      if (v.degenerate_f2) ++sum.degenerate_f2;
    }
    sum.verdicts.push_back(std::move(v));
  }
  sum.skipped = static_cast<long long>(lines.size()) - sum.graphs -
                static_cast<long long>(sum.parse_errors.size());
  return sum;
}

/// reg(R/I(g)) >= 3 and every single-vertex deletion drops it below 3.
inline bool is_vertex_minimal(const Graph& g, const FieldSpec& f, const HochsterEngine& engine) {
  if (!engine.regularity_at_least(g, f, 3)) return false;
  for (int x = 0; x < g.size(); ++x)
    if (engine.regularity_at_least(delete_vertex(g, x), f, 3)) return false;
  return true;
}

/// Lexicographically first non-adjacent pair with a common neighbor.
inline std::optional<std::pair<int, int>> common_neighbor_pair(const Graph& g) {
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      if (!g.has_edge(a, b) && (g.neighbors(a) & g.neighbors(b)).any()) return {{a, b}};
  return std::nullopt;
}

/// One new vertex adjacent to everything except u1 and u2.
inline Graph extend_with_dominating_vertex(const Graph& g, int u1, int u2) {
  if (u1 == u2 || u1 < 0 || u2 < 0 || u1 >= g.size() || u2 >= g.size())
    throw std::invalid_argument("extend_with_dominating_vertex: need two distinct vertices");
  Graph h(g.size() + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (int v = 0; v < g.size(); ++v) {
    h.set_label(v, g.label(v));
    if (v != u1 && v != u2) h.add_edge(v, g.size());
  }
  h.set_label(g.size(), "v3");
  return h;
}

struct GadgetBundle {
  Graph base;
  int a = 0, b = 0;           // the chosen non-adjacent pair with common neighbors
  Graph gprime;               // base + v1 + v2
  Graph gdoubleprime;         // gprime - b
  Graph gtripleprime;         // gdoubleprime - a
  Graph h;                    // gtripleprime - v2
  int v1_in_gprime = 0, v2_in_gprime = 0;
  int v1_in_gtriple = 0, v2_in_gtriple = 0;
  int v1_in_h = 0;
};

/// The extension and deletion sequence: v1, v2 joined to the common
/// neighborhood of a and b plus the edge {v1,v2}; then delete b, a, v2.
/// The complement of the final graph is the complement of the base with the
/// pair {a,b} contracted (checked here).
inline GadgetBundle build_gadgets(const Graph& g, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= g.size() || b >= g.size())
    throw std::invalid_argument("build_gadgets: bad vertex pair");
  if (g.has_edge(a, b)) throw std::invalid_argument("build_gadgets: {a,b} must be a non-edge");
  Bits128 common = g.neighbors(a) & g.neighbors(b);
  if (common.none())
    throw std::invalid_argument("build_gadgets: a and b have no common neighbor");

  GadgetBundle bundle;
  bundle.base = g;
  bundle.a = a;
  bundle.b = b;
  int n = g.size();
  Graph gp(n + 2);
  for (auto [u, v] : g.edges()) gp.add_edge(u, v);
  for (int v = 0; v < n; ++v) gp.set_label(v, g.label(v));
  int v1 = n, v2 = n + 1;
  gp.set_label(v1, "v1");
  gp.set_label(v2, "v2");
  for (int w = common.lowest(); w >= 0; w = common.next(w + 1)) {
    gp.add_edge(v1, w);
    gp.add_edge(v2, w);
  }
  gp.add_edge(v1, v2);
  bundle.gprime = gp;
  bundle.v1_in_gprime = v1;
  bundle.v2_in_gprime = v2;

  auto shift = [](int v, int deleted) { return v - (v > deleted ? 1 : 0); };
  bundle.gdoubleprime = delete_vertex(gp, b);
  int a2 = shift(a, b), v1_2 = shift(v1, b), v2_2 = shift(v2, b);
  bundle.gtripleprime = delete_vertex(bundle.gdoubleprime, a2);
  bundle.v1_in_gtriple = shift(v1_2, a2);
  bundle.v2_in_gtriple = shift(v2_2, a2);
  bundle.h = delete_vertex(bundle.gtripleprime, bundle.v2_in_gtriple);
  bundle.v1_in_h = shift(bundle.v1_in_gtriple, bundle.v2_in_gtriple);

  if (!are_isomorphic(complement(bundle.h), contract_edge(complement(g), a, b)))
    throw std::logic_error("build_gadgets: complement(h) is not the contracted complement");
  return bundle;
}

struct GadgetReport {
  int reg_base = 0, reg_gprime = 0, reg_gdoubleprime = 0, reg_gtripleprime = 0, reg_h = 0;
  int reg_t1 = 0, reg_t2 = 0;
  bool all_three = false;      // every derived graph keeps regularity 3
  bool t_equal = false;        // reg(R/T1) == reg(R/T2)
  bool contraction_iso = false;

  std::string to_json() const {
    std::ostringstream out;
    out << "{\"reg_base\":" << reg_base << ",\"reg_gprime\":" << reg_gprime
        << ",\"reg_gdoubleprime\":" << reg_gdoubleprime
        << ",\"reg_gtripleprime\":" << reg_gtripleprime << ",\"reg_h\":" << reg_h
        << ",\"reg_t1\":" << reg_t1 << ",\"reg_t2\":" << reg_t2
        << ",\"all_three\":" << (all_three ? "true" : "false")
        << ",\"t_equal\":" << (t_equal ? "true" : "false")
        << ",\"contraction_iso\":" << (contraction_iso ? "true" : "false") << "}";
    return out.str();
  }
};

/// Regularity of every graph in the bundle, plus the two splitting-side
/// ideals T1 = (I(G'''), v2) cap (v2 w : w in N(v2)) and the analogue T2 in
/// the deleted graph. The base must have regularity exactly 3 and be
/// vertex-minimal.
inline GadgetReport gadget_step_checks(const GadgetBundle& bundle, const FieldSpec& f,
                                       const HochsterEngine& engine) {
  GadgetReport r;
  r.reg_base = engine.regularity(bundle.base, f);
  if (r.reg_base != 3)
    throw std::invalid_argument("gadget_step_checks: base regularity must be 3");
  if (!is_vertex_minimal(bundle.base, f, engine))
    throw std::invalid_argument("gadget_step_checks: base must be vertex-minimal");
  r.reg_gprime = engine.regularity(bundle.gprime, f);
  r.reg_gdoubleprime = engine.regularity(bundle.gdoubleprime, f);
  r.reg_gtripleprime = engine.regularity(bundle.gtripleprime, f);
  r.reg_h = engine.regularity(bundle.h, f);
  r.all_three = r.reg_gprime == 3 && r.reg_gdoubleprime == 3 && r.reg_gtripleprime == 3 &&
                r.reg_h == 3;

  auto star_ideal = [](const Graph& g, int center) {
    std::vector<Bits128> gens;
    Bits128 nb = g.neighbors(center);
    for (int w = nb.lowest(); w >= 0; w = nb.next(w + 1))
      gens.push_back(Bits128::single(center) | Bits128::single(w));
    return SquarefreeIdeal(g.size(), std::move(gens));
  };
  SquarefreeIdeal t1 = intersect(add_variable(edge_ideal(bundle.gtripleprime), bundle.v2_in_gtriple),
                                 star_ideal(bundle.gtripleprime, bundle.v2_in_gtriple));
  SquarefreeIdeal t2 = intersect(add_variable(edge_ideal(bundle.h), bundle.v1_in_h),
                                 star_ideal(bundle.h, bundle.v1_in_h));
  r.reg_t1 = engine.regularity(t1, f);
  r.reg_t2 = engine.regularity(t2, f);
  r.t_equal = (r.reg_t1 == r.reg_t2);
  r.contraction_iso = are_isomorphic(complement(bundle.h),
                                     contract_edge(complement(bundle.base), bundle.a, bundle.b));
  return r;
}

struct AnticycleLinkEntry {
  int vertex = 0;
  int reg = 0;              // reg(R/I(G_x))
  bool spanning_anticycle;  // complement of G_x is an induced cycle on all its vertices
};

struct AnticycleLinkReport {
  std::vector<AnticycleLinkEntry> entries;
  bool all_reg2 = true;
  bool all_anticycles = true;
};

/// For a vertex-minimal regularity-3 graph: every deleted-neighborhood
/// subgraph G_x should have regularity 2 and complement a spanning induced
/// cycle of length >= 4.
inline AnticycleLinkReport anticycle_link_check(const Graph& g, const FieldSpec& f,
                                                const HochsterEngine& engine) {
  if (engine.regularity(g, f) != 3)
    throw std::invalid_argument("anticycle_link_check: regularity must be 3");
  if (!is_vertex_minimal(g, f, engine))
    throw std::invalid_argument("anticycle_link_check: graph must be vertex-minimal");
  AnticycleLinkReport rep;
  for (int x = 0; x < g.size(); ++x) {
    Graph gx = nonneighborhood_subgraph(g, x);
    AnticycleLinkEntry e;
    e.vertex = x;
    e.reg = engine.regularity(gx, f);
    Graph gxc = complement(gx);
    bool cycle = gx.size() >= 4 && is_connected(gxc);
    for (int v = 0; cycle && v < gxc.size(); ++v)
      if (gxc.degree(v) != 2) cycle = false;
    e.spanning_anticycle = cycle;
    rep.all_reg2 = rep.all_reg2 && (e.reg == 2);
    rep.all_anticycles = rep.all_anticycles && e.spanning_anticycle;
    rep.entries.push_back(e);
  }
  return rep;
}

/// Counterexample bundle: the graph, both Betti tables, and either the
/// surface certificate or the search-exhaustion statement.
inline std::string counterexample_json(const Verdict& v, const BettiTable& table_f0,
                                       const BettiTable& table_f2,
                                       const SurfaceSearchCaps& caps) {
  std::ostringstream out;
  out << "{\"graph\":\"" << v.graph6 << "\",\"verdict\":" << v.to_json()
      << ",\"betti_f0\":" << table_f0.to_json() << ",\"betti_f2\":" << table_f2.to_json()
      << ",\"surface\":";
  if (v.certificate)
    out << v.certificate->to_json();
  else
    out << "{\"absent\":true,\"search_max_nodes\":" << caps.max_nodes
        << ",\"search_max_triangles\":" << caps.max_triangles << "}";
  out << "}";
  return out.str();
}

}  // namespace regsurf
