#pragma once
// Squarefree monomial ideals as antichains of generator supports, and the
// generator-level operations (colon, sum with a variable, intersection,
// variable partition, disjoint sum over separate variable blocks).

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "regsurf/bits.hpp"
#include "regsurf/errors.hpp"
#include "regsurf/graph.hpp"

namespace regsurf {

struct SquarefreeIdeal {
  int nvars = 0;
  std::vector<Bits128> gens;  // minimal antichain, sorted by (size, index sequence)

  SquarefreeIdeal() = default;

  SquarefreeIdeal(int n, std::vector<Bits128> generators) : nvars(n), gens(std::move(generators)) {
    for (const Bits128& g : gens) {
      if (g.none()) throw std::invalid_argument("SquarefreeIdeal: empty generator support");
      if (g.and_not(Bits128::first_n(n)).any())
        throw std::invalid_argument("SquarefreeIdeal: generator outside the variable range");
    }
    minimalize();
  }

  static SquarefreeIdeal zero(int n) { return SquarefreeIdeal(n, {}); }

  bool is_zero() const { return gens.empty(); }

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

  /// Drop non-minimal supports and sort canonically.
  void minimalize() {
    std::sort(gens.begin(), gens.end(), Bits128::support_less);
    std::vector<Bits128> keep;
    for (const Bits128& g : gens) {
      bool redundant = false;
      for (const Bits128& k : keep)
        if (k.is_subset_of(g)) {
          redundant = true;
          break;
        }
      if (!redundant) keep.push_back(g);
    }
    gens = std::move(keep);
  }
};

/// One degree-two generator per edge; the zero ideal for edgeless graphs.
inline SquarefreeIdeal edge_ideal(const Graph& g) {
  std::vector<Bits128> gens;
  for (auto [u, v] : g.edges()) gens.push_back(Bits128::single(u) | Bits128::single(v));
  return SquarefreeIdeal(g.size(), std::move(gens));
}

/// (I : x): strip x from generators divisible by it, keep the rest, minimalize.
inline SquarefreeIdeal colon_by_variable(const SquarefreeIdeal& i, int x) {
  std::vector<Bits128> gens;
  Bits128 xb = Bits128::single(x);
  for (const Bits128& g : i.gens) gens.push_back(g.and_not(xb));
  // stripping can only produce nonempty supports unless a generator was {x},
  // in which case the colon is the unit ideal; that cannot arise from a
  // proper squarefree ideal resolution context, so reject it explicitly.
  for (const Bits128& g : gens)
    if (g.none()) throw std::invalid_argument("colon_by_variable: colon by a generator variable yields the unit ideal");
  return SquarefreeIdeal(i.nvars, std::move(gens));
}

/// (I, x): adjoin the variable x as a generator, minimalize.
inline SquarefreeIdeal add_variable(const SquarefreeIdeal& i, int x) {
  std::vector<Bits128> gens = i.gens;
  gens.push_back(Bits128::single(x));
  return SquarefreeIdeal(i.nvars, std::move(gens));
}

/// Intersection: pairwise unions of supports (squarefree lcm), minimalized.
inline SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.nvars != b.nvars)
    throw std::invalid_argument("intersect: ideals live on different variable counts");
  std::vector<Bits128> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  for (const Bits128& g : a.gens)
    for (const Bits128& h : b.gens) gens.push_back(g | h);
  return SquarefreeIdeal(a.nvars, std::move(gens));
}

/// x-partition: (generators divisible by x, the rest).
inline std::pair<SquarefreeIdeal, SquarefreeIdeal> x_partition(const SquarefreeIdeal& i, int x) {
  std::vector<Bits128> with, without;
  for (const Bits128& g : i.gens) (g.test(x) ? with : without).push_back(g);
  return {SquarefreeIdeal(i.nvars, std::move(with)), SquarefreeIdeal(i.nvars, std::move(without))};
}

/// Sum on disjoint variable blocks: b's variables are shifted past a's.
inline SquarefreeIdeal disjoint_sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  int n = a.nvars + b.nvars;
  if (n > Bits128::capacity) throw std::invalid_argument("disjoint_sum: too many variables");
  std::vector<Bits128> gens = a.gens;
  for (const Bits128& g : b.gens) {
    Bits128 shifted;
    for (int v = g.lowest(); v >= 0; v = g.next(v + 1)) shifted.set(v + a.nvars);
    gens.push_back(shifted);
  }
  return SquarefreeIdeal(n, std::move(gens));
}

/// Text format: first line "n", then one generator per line as
/// space-separated variable indices.
inline SquarefreeIdeal parse_ideal(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("ideal: missing variable count line");
  int n = -1;
  try {
    n = std::stoi(line);
  } catch (...) {
    throw parse_error("ideal: bad variable count: " + line);
  }
  if (n < 0 || n > Bits128::capacity) throw parse_error("ideal: variable count out of range");
  std::vector<Bits128> gens;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Bits128 g;
    long v;
    while (ls >> v) {
      if (v < 0 || v >= n) throw parse_error("ideal: variable index out of range: " + line);
      g.set(static_cast<int>(v));
    }
    if (g.none()) throw parse_error("ideal: empty generator line");
    gens.push_back(g);
  }
  return SquarefreeIdeal(n, std::move(gens));
}

inline SquarefreeIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

inline std::string format_ideal(const SquarefreeIdeal& i) {
  std::ostringstream out;
  out << i.nvars << "\n";
  for (const Bits128& g : i.gens) {
    bool first = true;
    for (int v = g.lowest(); v >= 0; v = g.next(v + 1)) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace regsurf
