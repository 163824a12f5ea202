#pragma once
// Field selection for homology ranks. Characteristic zero is normally
// computed as agreement of ranks over two fixed 30-bit primes, escalating to
// exact integer elimination when they ever disagree; an explicit exact mode
// is also available.

#include <cstdint>
#include <string>

#include "regsurf/errors.hpp"

namespace regsurf {

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * static_cast<std::uint64_t>(d) <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline constexpr std::uint32_t kSurrogatePrimeA = 1073741789;  // largest prime below 2^30
inline constexpr std::uint32_t kSurrogatePrimeB = 1073741827;  // smallest prime above 2^30

struct FieldSpec {
  enum class Kind { char_two, prime, zero_surrogate, zero_exact };

  Kind kind = Kind::zero_surrogate;
  std::uint32_t p = 0;                                // for Kind::prime
  std::uint32_t surrogate_a = kSurrogatePrimeA;       // for Kind::zero_surrogate
  std::uint32_t surrogate_b = kSurrogatePrimeB;

  static FieldSpec f2() { return {Kind::char_two}; }
  static FieldSpec f0() { return {Kind::zero_surrogate}; }
  static FieldSpec f0_exact() { return {Kind::zero_exact}; }
  static FieldSpec fp(std::uint32_t prime) {
    if (prime <= 2 || !is_prime_u32(prime))
      throw parse_error("field: fp requires an odd prime greater than 2, got " +
                        std::to_string(prime));
    FieldSpec f{Kind::prime};
    f.p = prime;
    return f;
  }

  /// CLI syntax: f2, f0, fp:<p>, f0exact.
  static FieldSpec parse(const std::string& s) {
    if (s == "f2") return f2();
    if (s == "f0") return f0();
    if (s == "f0exact") return f0_exact();
    if (s.rfind("fp:", 0) == 0) {
      std::uint64_t v = 0;
      try {
        v = std::stoull(s.substr(3));
      } catch (...) {
        throw parse_error("field: bad prime in '" + s + "'");
      }
      if (v >= (1ull << 31)) throw parse_error("field: prime must be below 2^31");
      return fp(static_cast<std::uint32_t>(v));
    }
    throw parse_error("field: expected f2, f0, fp:<p> or f0exact, got '" + s + "'");
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::char_two:
        return "f2";
      case Kind::prime:
        return "fp:" + std::to_string(p);
      case Kind::zero_surrogate:
        return "f0";
      case Kind::zero_exact:
        return "f0exact";
    }
    return "?";
  }

  bool char_two() const { return kind == Kind::char_two; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

}  // namespace regsurf
