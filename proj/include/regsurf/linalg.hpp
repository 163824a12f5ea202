#pragma once
// Exact matrix ranks over the supported fields: bit-parallel elimination for
// characteristic two, word elimination for odd primes, and fraction-free
// Bareiss elimination with big integers for the exact characteristic-zero
// path. The char-zero surrogate takes the agreement of two 30-bit primes and
// escalates to the exact path if they ever disagree.

#include <cstdint>
#include <vector>

#include "regsurf/bigint.hpp"
#include "regsurf/field.hpp"

namespace regsurf {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<std::int8_t> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::int8_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::int8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

inline int rank_gf2(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  int words = (m.cols + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m.rows) * words, 0);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (m.at(r, c) & 1) rows[static_cast<std::size_t>(r) * words + c / 64] |= 1ull << (c % 64);

  auto row = [&](int r) { return rows.data() + static_cast<std::size_t>(r) * words; };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int w = c / 64;
    std::uint64_t bit = 1ull << (c % 64);
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (row(r)[w] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int k = 0; k < words; ++k) std::swap(row(pivot)[k], row(rank)[k]);
    for (int r = rank + 1; r < m.rows; ++r)
      if (row(r)[w] & bit)
        for (int k = w; k < words; ++k) row(r)[k] ^= row(rank)[k];
    ++rank;
  }
  return rank;
}

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (static_cast<unsigned __int128>(r) * b) % p;
    b = (static_cast<unsigned __int128>(b) * b) % p;
    e >>= 1;
  }
  return r;
}

}  // namespace detail

inline int rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::uint64_t> w(static_cast<std::size_t>(m.rows) * m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      std::int64_t v = m.at(r, c) % static_cast<std::int64_t>(p);
      if (v < 0) v += p;
      w[static_cast<std::size_t>(r) * m.cols + c] = static_cast<std::uint64_t>(v);
    }
  auto at = [&](int r, int c) -> std::uint64_t& {
    return w[static_cast<std::size_t>(r) * m.cols + c];
  };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int k = c; k < m.cols; ++k) std::swap(at(pivot, k), at(rank, k));
    std::uint64_t inv = detail::pow_mod(at(rank, c), p - 2, p);
    for (int r = rank + 1; r < m.rows; ++r) {
      if (at(r, c) == 0) continue;
      std::uint64_t f = (static_cast<unsigned __int128>(at(r, c)) * inv) % p;
      for (int k = c; k < m.cols; ++k) {
        std::uint64_t sub = (static_cast<unsigned __int128>(f) * at(rank, k)) % p;
        at(r, k) = (at(r, k) + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

/// Rank over the rationals by fraction-free elimination.
inline int rank_exact(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<BigInt> w;
  w.reserve(static_cast<std::size_t>(m.rows) * m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) w.emplace_back(m.at(r, c));
  auto at = [&](int r, int c) -> BigInt& {
    return w[static_cast<std::size_t>(r) * m.cols + c];
  };
  BigInt prev(1);
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int k = c; k < m.cols; ++k) std::swap(at(pivot, k), at(rank, k));
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int k = c + 1; k < m.cols; ++k)
        at(r, k) = div_exact(at(rank, c) * at(r, k) - at(r, c) * at(rank, k), prev);
      at(r, c) = BigInt(0);
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

struct RankStats {
  long long escalations = 0;  // surrogate prime disagreements resolved exactly
};

/// Rank over the requested field.
inline int rank(const IntMatrix& m, const FieldSpec& f, RankStats* stats = nullptr) {
  switch (f.kind) {
    case FieldSpec::Kind::char_two:
      return rank_gf2(m);
    case FieldSpec::Kind::prime:
      return rank_mod_p(m, f.p);
    case FieldSpec::Kind::zero_exact:
      return rank_exact(m);
    case FieldSpec::Kind::zero_surrogate: {
      int ra = rank_mod_p(m, f.surrogate_a);
      int rb = rank_mod_p(m, f.surrogate_b);
      if (ra == rb) return ra;
      if (stats) ++stats->escalations;
      return rank_exact(m);
    }
  }
  return 0;
}

}  // namespace regsurf
