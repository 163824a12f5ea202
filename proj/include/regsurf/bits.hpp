#pragma once
// 128-bit vertex sets: the index type underlying graphs, monomial supports
// and simplicial faces throughout the library.

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace regsurf {

struct Bits128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static constexpr int capacity = 128;

  static Bits128 zero() { return {}; }

  static Bits128 single(int i) {
    Bits128 b;
    b.set(i);
    return b;
  }

  /// Mask of bit positions 0..n-1.
  static Bits128 first_n(int n) {
    Bits128 b;
    if (n <= 0) return b;
    if (n >= 128) {
      b.lo = ~0ull;
      b.hi = ~0ull;
    } else if (n >= 64) {
      b.lo = ~0ull;
      b.hi = (n == 64) ? 0ull : ((1ull << (n - 64)) - 1);
    } else {
      b.lo = (1ull << n) - 1;
    }
    return b;
  }

  static Bits128 from_indices(const std::vector<int>& idx) {
    Bits128 b;
    for (int i : idx) b.set(i);
    return b;
  }

  bool test(int i) const {
    return i < 64 ? ((lo >> i) & 1u) != 0 : ((hi >> (i - 64)) & 1u) != 0;
  }
  void set(int i) {
    if (i < 0 || i >= 128) throw std::out_of_range("Bits128::set: index out of range");
    if (i < 64)
      lo |= (1ull << i);
    else
      hi |= (1ull << (i - 64));
  }
  void reset(int i) {
    if (i < 64)
      lo &= ~(1ull << i);
    else
      hi &= ~(1ull << (i - 64));
  }

  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool any() const { return (lo | hi) != 0; }
  bool none() const { return !any(); }

  friend Bits128 operator&(Bits128 a, Bits128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
  friend Bits128 operator|(Bits128 a, Bits128 b) { return {a.lo | b.lo, a.hi | b.hi}; }
  friend Bits128 operator^(Bits128 a, Bits128 b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
  Bits128& operator&=(Bits128 b) { lo &= b.lo; hi &= b.hi; return *this; }
  Bits128& operator|=(Bits128 b) { lo |= b.lo; hi |= b.hi; return *this; }
  Bits128& operator^=(Bits128 b) { lo ^= b.lo; hi ^= b.hi; return *this; }

  /// this & ~b
  Bits128 and_not(Bits128 b) const { return {lo & ~b.lo, hi & ~b.hi}; }

  bool is_subset_of(Bits128 b) const { return and_not(b).none(); }
  bool intersects(Bits128 b) const { return ((*this) & b).any(); }

  friend bool operator==(const Bits128&, const Bits128&) = default;

  /// Index of the lowest set bit, or -1 when empty.
  int lowest() const {
    if (lo) return std::countr_zero(lo);
    if (hi) return 64 + std::countr_zero(hi);
    return -1;
  }

  /// Lowest set bit at position >= i, or -1.
  int next(int i) const {
    if (i < 64) {
      std::uint64_t m = lo & ~((i == 0) ? 0ull : ((1ull << i) - 1));
      if (m) return std::countr_zero(m);
      i = 64;
    }
    std::uint64_t m = hi & ~((i == 64) ? 0ull : ((1ull << (i - 64)) - 1));
    if (m) return 64 + std::countr_zero(m);
    return -1;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = lowest(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  /// Numeric order (hi, lo). Deterministic total order for face lists.
  static bool value_less(const Bits128& a, const Bits128& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.lo < b.lo;
  }

  /// Antichain order: cardinality first, then by ascending index sequence.
  /// The owner of the lowest differing bit is the smaller set.
  static bool support_less(const Bits128& a, const Bits128& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    Bits128 d = a ^ b;
    if (d.none()) return false;
    return a.test(d.lowest());
  }
};

struct Bits128Hash {
  std::size_t operator()(const Bits128& b) const {
    std::uint64_t x = b.lo * 0x9e3779b97f4a7c15ull;
    x ^= b.hi + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
    return static_cast<std::size_t>(x);
  }
};

using VertexSet = Bits128;

}  // namespace regsurf
