#pragma once
// Graded Betti tables of squarefree monomial quotients via Hochster's
// formula: beta_{i,j}(R/I) = sum over |W| = j of dim H~_{j-i-1}(Delta_W).
//
// The subset loop decomposes each restriction into the join of the
// components of its generator hypergraph -- for an edge ideal, the
// connected components of the induced graph -- and combines component
// homology by the field Kunneth rule for joins. Component homology is
// memoized under canonical relabeling, so isomorphic restrictions are
// computed once.

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "regsurf/canon.hpp"
#include "regsurf/complex.hpp"
#include "regsurf/errors.hpp"
#include "regsurf/field.hpp"
#include "regsurf/graph.hpp"
#include "regsurf/homology.hpp"
#include "regsurf/ideal.hpp"

namespace regsurf {

/// Sparse Betti table of a quotient R/I. Entries are strictly positive;
/// beta_{0,0} = 1 is always present.
struct BettiTable {
  FieldSpec field;
  int nvars = 0;
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta

  long long beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  /// max { j - i : beta_{i,j} != 0 }; 0 for the zero ideal.
  int regularity() const {
    int r = 0;
    for (const auto& [ij, b] : entries) r = std::max(r, ij.second - ij.first);
    return r;
  }

  /// max { i : beta_{i,j} != 0 }.
  int projective_dimension() const {
    int p = 0;
    for (const auto& [ij, b] : entries) p = std::max(p, ij.first);
    return p;
  }

  /// Betti numbers of the ideal itself: beta_{i,j}(I) = beta_{i+1,j}(R/I).
  BettiTable ideal_convention() const {
    BettiTable t{field, nvars, {}};
    for (const auto& [ij, b] : entries)
      if (ij.first >= 1) t.entries[{ij.first - 1, ij.second}] = b;
    return t;
  }

  /// All entries on the single diagonal j = i + d (one generator degree).
  bool is_linear() const {
    if (entries.empty()) return false;
    int d = -1;
    for (const auto& [ij, b] : entries) {
      if (d < 0)
        d = ij.second - ij.first;
      else if (ij.second - ij.first != d)
        return false;
    }
    return true;
  }

  std::string to_json() const {
    std::ostringstream out;
    out << "{\"field\":\"" << field.to_string() << "\",\"nvars\":" << nvars << ",\"entries\":[";
    bool first = true;
    for (const auto& [ij, b] : entries) {
      if (!first) out << ",";
      out << "[" << ij.first << "," << ij.second << "," << b << "]";
      first = false;
    }
    out << "]}";
    return out.str();
  }

  /// Macaulay2-style triangle: rows are j - i, columns are i.
  std::string macaulay_text() const {
    int pd = projective_dimension();
    int reg = regularity();
    std::vector<std::string> header, total;
    std::vector<std::vector<std::string>> rows(reg + 1);
    for (int i = 0; i <= pd; ++i) {
      header.push_back(std::to_string(i));
      long long t = 0;
      for (int r = 0; r <= reg; ++r) t += beta(i, i + r);
      total.push_back(std::to_string(t));
      for (int r = 0; r <= reg; ++r) {
        long long b = beta(i, i + r);
        rows[r].push_back(b ? std::to_string(b) : ".");
      }
    }
    std::vector<std::size_t> width(pd + 1, 1);
    for (int i = 0; i <= pd; ++i) {
      width[i] = std::max(header[i].size(), total[i].size());
      for (int r = 0; r <= reg; ++r) width[i] = std::max(width[i], rows[r][i].size());
    }
    auto line = [&](const std::string& head, const std::vector<std::string>& cells) {
      std::ostringstream o;
      o << head;
      for (int i = 0; i <= pd; ++i) {
        o << " ";
        for (std::size_t k = cells[i].size(); k < width[i]; ++k) o << " ";
        o << cells[i];
      }
      return o.str();
    };
    std::ostringstream out;
    out << line("      ", header) << "\n";
    out << line("total:", total) << "\n";
    for (int r = 0; r <= reg; ++r) {
      std::string head = std::to_string(r) + ":";
      while (head.size() < 6) head += " ";
      out << line(head, rows[r]) << "\n";
    }
    return out.str();
  }
};

struct HochsterCaps {
  int var_cap = 20;                        // hard limit on 2^nvars subset loops
  std::uint64_t max_subsets = 1ull << 22;  // subsets processed per table
  long long time_limit_ms = 0;             // 0 = unlimited
  int threads = 1;
};

class HochsterEngine {
 public:
  explicit HochsterEngine(HochsterCaps caps = {}) : caps_(caps) {}

  const HochsterCaps& caps() const { return caps_; }

  long long rank_escalations() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_.escalations;
  }

  /// Full Betti table of R/I over f.
  BettiTable table(const SquarefreeIdeal& ideal, const FieldSpec& f) const {
    if (ideal.nvars > caps_.var_cap)
      throw std::invalid_argument("hochster: " + std::to_string(ideal.nvars) +
                                  " variables exceeds the configured cap of " +
                                  std::to_string(caps_.var_cap));
    BettiTable t{f, ideal.nvars, {}};
    if (ideal.is_zero()) {
      t.entries[{0, 0}] = 1;
      return t;
    }
    int n = ideal.nvars;
    std::uint64_t total = 1ull << n;
    int threads = std::max(1, caps_.threads);
    auto deadline = start_clock();

    if (threads == 1) {
      std::uint64_t processed = 0;
      // increasing popcount
      for (int size = 0; size <= n; ++size) {
        std::uint64_t mask = (size == 0) ? 0 : (1ull << size) - 1;
        for (;;) {
          check_budget(++processed, deadline);
          accumulate(t.entries, ideal, Bits128{mask, 0}, f, size);
          if (size == 0) break;
          // Gosper's hack: next mask with the same popcount
          std::uint64_t c = mask & (~mask + 1), r = mask + c;
          mask = (((r ^ mask) >> 2) / c) | r;
          if (mask >= total) break;
        }
      }
      return t;
    }

    std::vector<std::map<std::pair<int, int>, long long>> locals(threads);
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> processed{0};
    std::atomic<bool> stop{false};
    std::vector<std::exception_ptr> errors(threads);
    for (int tid = 0; tid < threads; ++tid) {
      pool.emplace_back([&, tid]() {
        try {
          for (std::uint64_t mask = tid; mask < total; mask += threads) {
            if (stop.load(std::memory_order_relaxed)) return;
            check_budget(processed.fetch_add(1) + 1, deadline);
            accumulate(locals[tid], ideal, Bits128{mask, 0}, f,
                       std::popcount(mask));
          }
        } catch (...) {
          errors[tid] = std::current_exception();
          stop.store(true);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& local : locals)
      for (const auto& [ij, b] : local) t.entries[ij] += b;
    return t;
  }

  BettiTable table(const Graph& g, const FieldSpec& f) const { return table(edge_ideal(g), f); }

  int regularity(const SquarefreeIdeal& ideal, const FieldSpec& f) const {
    return table(ideal, f).regularity();
  }

  /// Regularity of R/I(g), cached under canonical relabeling.
  int regularity(const Graph& g, const FieldSpec& f) const {
    std::string key = f.to_string() + "|" + canonical_form(g).key();
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = graph_reg_memo_.find(key);
      if (it != graph_reg_memo_.end()) return it->second;
    }
    int reg = regularity(edge_ideal(g), f);
    std::lock_guard<std::mutex> lock(mu_);
    graph_reg_memo_.emplace(std::move(key), reg);
    return reg;
  }

  /// True once some subset witnesses an entry with j - i >= bound; scans in
  /// increasing popcount and stops at the first witness.
  bool regularity_at_least(const SquarefreeIdeal& ideal, const FieldSpec& f, int bound) const {
    if (bound <= 0) return true;
    if (ideal.is_zero()) return false;
    if (ideal.nvars > caps_.var_cap)
      throw std::invalid_argument("hochster: variable count exceeds the configured cap");
    int n = ideal.nvars;
    std::uint64_t total = 1ull << n;
    std::uint64_t processed = 0;
    auto deadline = start_clock();
    for (int size = bound; size <= n; ++size) {  // an entry j - i = k needs |W| >= k
      std::uint64_t mask = (1ull << size) - 1;
      for (;;) {
        check_budget(++processed, deadline);
        auto dims = subset_homology(ideal, Bits128{mask, 0}, f);
        for (int k = bound; k < static_cast<int>(dims.size()); ++k)
          if (dims[k] != 0) return true;
        std::uint64_t c = mask & (~mask + 1), r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if (mask >= total) break;
      }
    }
    return false;
  }

  bool regularity_at_least(const Graph& g, const FieldSpec& f, int bound) const {
    return regularity_at_least(edge_ideal(g), f, bound);
  }

 private:
  using Clock = std::chrono::steady_clock;

  Clock::time_point start_clock() const { return Clock::now(); }

  void check_budget(std::uint64_t processed, Clock::time_point start) const {
    if (processed > caps_.max_subsets)
      throw budget_error("hochster: subset budget exceeded", processed);
    if (caps_.time_limit_ms > 0 && (processed & 255) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
      if (ms.count() > caps_.time_limit_ms)
        throw budget_error("hochster: time budget exceeded", processed);
    }
  }

  void accumulate(std::map<std::pair<int, int>, long long>& entries, const SquarefreeIdeal& ideal,
                  Bits128 w, const FieldSpec& f, int j) const {
    auto dims = subset_homology(ideal, w, f);
    for (int k = 0; k < static_cast<int>(dims.size()); ++k)
      if (dims[k] != 0) entries[{j - k, j}] += dims[k];
  }

  /// dims[k] = dim H~_{k-1} of the restriction Delta_W, via the join rule
  /// over the components of the generator hypergraph inside W.
  std::vector<long long> subset_homology(const SquarefreeIdeal& ideal, Bits128 w,
                                         const FieldSpec& f) const {
    // union-find over the vertices of w, joined along generators inside w
    std::vector<int> verts = w.to_indices();
    int m = static_cast<int>(verts.size());
    std::vector<int> pos(ideal.nvars, -1);
    for (int i = 0; i < m; ++i) pos[verts[i]] = i;
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::vector<const Bits128*> inside;
    for (const Bits128& g : ideal.gens)
      if (g.is_subset_of(w)) {
        inside.push_back(&g);
        int first = -1;
        for (int v = g.lowest(); v >= 0; v = g.next(v + 1)) {
          if (first < 0)
            first = find(pos[v]);
          else
            parent[find(pos[v])] = first;
        }
      }

    std::vector<long long> result{1};  // join identity: the empty-complex factor
    std::vector<Bits128> comp_masks(m);
    for (int i = 0; i < m; ++i) comp_masks[find(i)].set(verts[i]);
    for (int i = 0; i < m; ++i) {
      if (find(i) != i) continue;
      Bits128 block = comp_masks[i];
      std::vector<long long> dims = component_homology(block, inside, f);
      bool all_zero = true;
      for (long long d : dims)
        if (d != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) return {};  // a cone factor kills the whole join
      std::vector<long long> next(result.size() + dims.size() - 1, 0);
      for (std::size_t a = 0; a < result.size(); ++a) {
        if (result[a] == 0) continue;
        for (std::size_t b = 0; b < dims.size(); ++b)
          next[a + b] += result[a] * dims[b];
      }
      result = std::move(next);
    }
    return result;
  }

  std::vector<long long> component_homology(Bits128 block,
                                            const std::vector<const Bits128*>& gens_in_w,
                                            const FieldSpec& f) const {
    std::vector<int> verts = block.to_indices();
    int m = static_cast<int>(verts.size());
    std::vector<Bits128> gens;
    for (const Bits128* g : gens_in_w)
      if (g->is_subset_of(block)) {
        Bits128 rel;
        int k = 0;
        for (int v : verts) {
          if (g->test(v)) rel.set(k);
          ++k;
        }
        gens.push_back(rel);
      }
    if (m == 1) {
      if (!gens.empty()) return {1};  // the vertex is excluded: the empty complex
      return {0, 0};                  // a point: contractible
    }

    // memo key: canonical graph for edge-type components, raw gens otherwise
    bool graph_like = true;
    for (const Bits128& g : gens)
      if (g.count() != 2) {
        graph_like = false;
        break;
      }
    std::string key;
    if (graph_like) {
      Graph g(m);
      for (const Bits128& e : gens) {
        int u = e.lowest();
        g.add_edge(u, e.next(u + 1));
      }
      key = f.to_string() + "|G|" + canonical_form(g).key();
    } else {
      std::sort(gens.begin(), gens.end(), Bits128::support_less);
      key = f.to_string() + "|H|" + std::to_string(m) + "|";
      for (const Bits128& g : gens) {
        key.append(reinterpret_cast<const char*>(&g.lo), sizeof(g.lo));
        key.append(reinterpret_cast<const char*>(&g.hi), sizeof(g.hi));
      }
    }
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = homology_memo_.find(key);
      if (it != homology_memo_.end()) return it->second;
    }

    // enumerate the faces (vertex subsets supporting no generator) by size
    std::vector<Bits128> pair_conflict(m);
    std::vector<std::vector<Bits128>> big_gens(m);
    for (const Bits128& g : gens) {
      if (g.count() == 2) {
        int u = g.lowest(), v = g.next(u + 1);
        pair_conflict[u].set(v);
        pair_conflict[v].set(u);
      } else {
        int top = -1;
        for (int v = g.lowest(); v >= 0; v = g.next(v + 1)) top = v;
        big_gens[top].push_back(g.and_not(Bits128::single(top)));
      }
    }
    std::vector<std::vector<Bits128>> levels(m + 1);
    levels[0].push_back(Bits128::zero());
    auto dfs = [&](auto&& self, Bits128 cur, int start, int size) -> void {
      for (int v = start; v < m; ++v) {
        if ((pair_conflict[v] & cur).any()) continue;
        bool blocked = false;
        for (const Bits128& rest : big_gens[v])
          if (rest.is_subset_of(cur)) {
            blocked = true;
            break;
          }
        if (blocked) continue;
        Bits128 nxt = cur | Bits128::single(v);
        levels[size + 1].push_back(nxt);
        self(self, nxt, v + 1, size + 1);
      }
    };
    dfs(dfs, Bits128::zero(), 0, 0);
    while (levels.size() > 1 && levels.back().empty()) levels.pop_back();
    for (auto& level : levels) std::sort(level.begin(), level.end(), Bits128::value_less);

    std::vector<long long> dims;
    {
      RankStats local;
      dims = detail::reduced_homology_from_levels(levels, f, &local);
      std::lock_guard<std::mutex> lock(mu_);
      stats_.escalations += local.escalations;
      homology_memo_.emplace(std::move(key), dims);
    }
    return dims;
  }

  HochsterCaps caps_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, std::vector<long long>> homology_memo_;
  mutable std::unordered_map<std::string, int> graph_reg_memo_;
  mutable RankStats stats_;
};

// ---------------------------------------------------------------------------
// Checks built on the engine
// ---------------------------------------------------------------------------

struct MatchingBounds {
  int induced_matching = 0;
  int regularity = 0;
  int matching = 0;
  bool ok = false;  // induced_matching <= regularity <= matching
};

inline MatchingBounds matching_bounds_check(const Graph& g, const FieldSpec& f,
                                            const HochsterEngine& engine) {
  MatchingBounds b;
  b.induced_matching = induced_matching_number(g);
  b.matching = matching_number(g);
  b.regularity = engine.regularity(g, f);
  b.ok = b.induced_matching <= b.regularity && b.regularity <= b.matching;
  return b;
}

enum class DichotomyVerdict { deletion_branch, link_branch, both };

struct DichotomyReport {
  int reg = 0;       // reg(R/I)
  int reg_del = 0;   // reg(R/(I,x))
  int reg_link = 0;  // reg(R/(I:x))
  bool deletion_holds = false;
  bool link_holds = false;
  bool upper_bound_ok = false;  // reg <= max(reg_del, reg_link + 1)
  bool degenerate = false;      // zero ideal, or x itself generates
  DichotomyVerdict verdict = DichotomyVerdict::both;
};

/// Which of reg(R/I) = reg(R/(I,x)) and reg(R/I) = reg(R/(I:x)) + 1 holds.
/// For the zero ideal both are reported by convention (the colon branch is
/// vacuous there).
inline DichotomyReport dichotomy_check(const SquarefreeIdeal& ideal, int x, const FieldSpec& f,
                                       const HochsterEngine& engine) {
  DichotomyReport r;
  if (ideal.is_zero()) {
    r.degenerate = true;
    r.deletion_holds = r.link_holds = r.upper_bound_ok = true;
    r.verdict = DichotomyVerdict::both;
    return r;
  }
  bool x_generates = false;
  for (const Bits128& g : ideal.gens)
    if (g == Bits128::single(x)) x_generates = true;
  r.reg = engine.regularity(ideal, f);
  r.reg_del = engine.regularity(add_variable(ideal, x), f);
  r.deletion_holds = (r.reg == r.reg_del);
  if (x_generates) {
    // (I : x) is the unit ideal; only the deletion branch is meaningful.
    r.degenerate = true;
    r.link_holds = false;
    r.upper_bound_ok = r.deletion_holds;
    r.verdict = DichotomyVerdict::deletion_branch;
    return r;
  }
  r.reg_link = engine.regularity(colon_by_variable(ideal, x), f);
  r.link_holds = (r.reg == r.reg_link + 1);
  r.upper_bound_ok = (r.reg <= std::max(r.reg_del, r.reg_link + 1));
  if (r.deletion_holds && r.link_holds)
    r.verdict = DichotomyVerdict::both;
  else if (r.deletion_holds)
    r.verdict = DichotomyVerdict::deletion_branch;
  else
    r.verdict = DichotomyVerdict::link_branch;
  return r;
}

struct SplittingReport {
  bool degenerate = false;      // one side of the x-partition is zero
  bool is_splitting = false;    // the Betti identity holds at every (i, j)
  bool iprime_linear = false;   // resolution of I' is linear
  bool reg_formula_ok = false;  // reg(I) = max{reg I', reg I'', reg(cap) - 1}
  bool pd_formula_ok = false;   // pd(I) = max{pd I', pd I'', pd(cap) + 1}
  // ideal-convention invariants
  int reg_i = 0, reg_p = 0, reg_pp = 0, reg_cap = 0;
  int pd_i = 0, pd_p = 0, pd_pp = 0, pd_cap = 0;
};

/// Betti-splitting test of the x-partition I = I' + I'', in the ideal
/// convention: beta_{i,j}(I) = beta_{i,j}(I') + beta_{i,j}(I'') +
/// beta_{i-1,j}(I' cap I'').
inline SplittingReport splitting_check(const SquarefreeIdeal& ideal, int x, const FieldSpec& f,
                                       const HochsterEngine& engine) {
  SplittingReport r;
  auto [iprime, idouble] = x_partition(ideal, x);
  if (iprime.is_zero() || idouble.is_zero()) {
    r.degenerate = true;
    return r;
  }
  SquarefreeIdeal cap = intersect(iprime, idouble);
  BettiTable ti = engine.table(ideal, f).ideal_convention();
  BettiTable tp = engine.table(iprime, f).ideal_convention();
  BettiTable tpp = engine.table(idouble, f).ideal_convention();
  BettiTable tc = engine.table(cap, f).ideal_convention();

  r.is_splitting = true;
  std::map<std::pair<int, int>, bool> keys;
  for (const auto& [ij, b] : ti.entries) keys[ij] = true;
  for (const auto& [ij, b] : tp.entries) keys[ij] = true;
  for (const auto& [ij, b] : tpp.entries) keys[ij] = true;
  for (const auto& [ij, b] : tc.entries) keys[{ij.first + 1, ij.second}] = true;
  for (const auto& [ij, unused] : keys) {
    long long lhs = ti.beta(ij.first, ij.second);
    long long rhs = tp.beta(ij.first, ij.second) + tpp.beta(ij.first, ij.second) +
                    tc.beta(ij.first - 1, ij.second);
    if (lhs != rhs) {
      r.is_splitting = false;
      break;
    }
  }
  r.iprime_linear = tp.is_linear();
  r.reg_i = ti.regularity();
  r.reg_p = tp.regularity();
  r.reg_pp = tpp.regularity();
  r.reg_cap = tc.regularity();
  r.pd_i = ti.projective_dimension();
  r.pd_p = tp.projective_dimension();
  r.pd_pp = tpp.projective_dimension();
  r.pd_cap = tc.projective_dimension();
  if (r.is_splitting) {
    r.reg_formula_ok = (r.reg_i == std::max({r.reg_p, r.reg_pp, r.reg_cap - 1}));
    r.pd_formula_ok = (r.pd_i == std::max({r.pd_p, r.pd_pp, r.pd_cap + 1}));
  }
  return r;
}

struct RegAddReport {
  int reg_a = 0, reg_b = 0, reg_sum = 0;
  bool ok = false;
};

/// reg(R/(I1 + I2)) = reg(R1/I1) + reg(R2/I2) on disjoint variable blocks.
/// Both ideals must be nonzero.
inline RegAddReport regadd_check(const SquarefreeIdeal& a, const SquarefreeIdeal& b,
                                 const FieldSpec& f, const HochsterEngine& engine) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("regadd_check: both ideals must be nonzero");
  RegAddReport r;
  r.reg_a = engine.regularity(a, f);
  r.reg_b = engine.regularity(b, f);
  r.reg_sum = engine.regularity(disjoint_sum(a, b), f);
  r.ok = (r.reg_sum == r.reg_a + r.reg_b);
  return r;
}

struct RegInterval {
  int lo = 0;
  int hi = 0;
  bool exact = false;       // lo == hi
  bool budget_hit = false;  // interval widened because the node budget ran out
};

namespace detail {

struct RegIntervalCtx {
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;
  bool budget_hit = false;
  std::unordered_map<std::string, int> memo;

  int upper(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    if (is_chordal(complement(g))) return 1;
    int mat = matching_number(g);
    if (++nodes > max_nodes) {
      budget_hit = true;
      return mat;
    }
    std::string key = canonical_form(g).key();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int x = 0;
    for (int v = 1; v < g.size(); ++v)
      if (g.degree(v) > g.degree(x)) x = v;
    int rec = std::max(upper(delete_vertex(g, x)), upper(nonneighborhood_subgraph(g, x)) + 1);
    int hi = std::min(mat, rec);
    memo.emplace(std::move(key), hi);
    return hi;
  }
};

}  // namespace detail

/// Field-independent bounds: lower from the induced matching number and the
/// induced-anticycle test, upper from reg <= max{reg(G-x), reg(G_x)+1} with
/// chordal-complement and edgeless base cases, capped by the matching number.
inline RegInterval reg_interval(const Graph& g, std::uint64_t max_nodes = 1ull << 20) {
  RegInterval r;
  if (g.edge_count() == 0) {
    r.lo = r.hi = 0;
    r.exact = true;
    return r;
  }
  Graph gc = complement(g);
  if (is_chordal(gc)) {
    r.lo = r.hi = 1;
    r.exact = true;
    return r;
  }
  r.lo = std::max(2, induced_matching_number(g));
  detail::RegIntervalCtx ctx{0, max_nodes, false, {}};
  r.hi = ctx.upper(g);
  r.budget_hit = ctx.budget_hit;
  r.exact = (r.lo == r.hi);
  return r;
}

}  // namespace regsurf
