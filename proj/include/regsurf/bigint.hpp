#pragma once
// Minimal signed arbitrary-precision integers: exactly the operations the
// fraction-free (Bareiss) elimination needs -- multiply, subtract, exact
// divide, sign tests. Base 2^32, sign-magnitude.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace regsurf {

class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design
    if (v < 0) {
      neg_ = true;
      store(static_cast<std::uint64_t>(-(v + 1)) + 1);
    } else {
      store(static_cast<std::uint64_t>(v));
    }
  }

  bool is_zero() const { return limbs_.empty(); }
  bool negative() const { return neg_; }
  int signum() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
  }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                            r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.neg_ = !r.is_zero() && (a.neg_ != b.neg_);
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) {
      BigInt r = b;
      r.neg_ = !b.neg_;
      return r;
    }
    if (a.neg_ != b.neg_) {  // a - (-|b|) = a + |b| with a's sign
      BigInt r;
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.neg_ = a.neg_;
      return r;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    BigInt r;
    if (c == 0) return r;
    if (c > 0) {
      r.limbs_ = sub_mag(a.limbs_, b.limbs_);
      r.neg_ = a.neg_;
    } else {
      r.limbs_ = sub_mag(b.limbs_, a.limbs_);
      r.neg_ = !a.neg_;
    }
    r.trim();
    return r;
  }

  /// Exact quotient; the remainder must be zero (checked).
  friend BigInt div_exact(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (a.is_zero()) return {};
    int c = cmp_mag(a.limbs_, b.limbs_);
    BigInt q;
    if (c < 0) throw std::logic_error("BigInt: inexact division");
    // binary long division on magnitudes
    int shift = bit_length(a.limbs_) - bit_length(b.limbs_);
    std::vector<std::uint32_t> rem = a.limbs_;
    std::vector<std::uint32_t> div = shl(b.limbs_, shift);
    std::vector<std::uint32_t> quo((shift / 32) + 1, 0);
    for (int s = shift; s >= 0; --s) {
      if (cmp_mag(rem, div) >= 0) {
        rem = sub_mag(rem, div);
        quo[s / 32] |= (1u << (s % 32));
      }
      div = shr1(div);
    }
    trim_vec(rem);
    if (!rem.empty()) throw std::logic_error("BigInt: inexact division");
    q.limbs_ = std::move(quo);
    q.trim();
    q.neg_ = !q.is_zero() && (a.neg_ != b.neg_);
    return q;
  }

  long long to_ll() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigInt: value exceeds long long");
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    if (!neg_ && mag > static_cast<std::uint64_t>(0x7fffffffffffffffLL))
      throw std::overflow_error("BigInt: value exceeds long long");
    if (neg_ && mag > static_cast<std::uint64_t>(0x7fffffffffffffffLL) + 1)
      throw std::overflow_error("BigInt: value exceeds long long");
    return neg_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
  }

  std::string to_string() const {  // decimal; test support
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = limbs_;
    std::string digits;
    while (!m.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / 10);
        rem = cur % 10;
      }
      digits.push_back(static_cast<char>('0' + rem));
      trim_vec(m);
    }
    if (neg_) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
  }

 private:
  void store(std::uint64_t v) {
    limbs_.clear();
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
  }

  void trim() {
    trim_vec(limbs_);
    if (limbs_.empty()) neg_ = false;
  }

  static void trim_vec(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t cur = carry;
      if (i < a.size()) cur += a[i];
      if (i < b.size()) cur += b[i];
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    trim_vec(r);
    return r;
  }

  // pre: |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
      borrow = 0;
      if (cur < 0) {
        cur += (1ll << 32);
        borrow = 1;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    trim_vec(r);
    return r;
  }

  static int bit_length(const std::vector<std::uint32_t>& v) {
    if (v.empty()) return 0;
    std::uint32_t top = v.back();
    int b = 0;
    while (top) {
      ++b;
      top >>= 1;
    }
    return static_cast<int>(v.size() - 1) * 32 + b;
  }

  static std::vector<std::uint32_t> shl(const std::vector<std::uint32_t>& v, int bits) {
    if (bits <= 0 || v.empty()) return v;
    int words = bits / 32, rem = bits % 32;
    std::vector<std::uint32_t> r(v.size() + words + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      r[i + words] |= v[i] << rem;
      if (rem) r[i + words + 1] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) >> (32 - rem));
    }
    trim_vec(r);
    return r;
  }

  static std::vector<std::uint32_t> shr1(const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> r = v;
    std::uint32_t carry = 0;
    for (std::size_t i = r.size(); i-- > 0;) {
      std::uint32_t next = r[i] & 1u;
      r[i] = (r[i] >> 1) | (carry << 31);
      carry = next;
    }
    trim_vec(r);
    return r;
  }

  bool neg_ = false;
  std::vector<std::uint32_t> limbs_;  // little-endian magnitude
};

}  // namespace regsurf
