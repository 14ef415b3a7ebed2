#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "steiner/error.hpp"

namespace steiner {

// Fixed-width 128-bit unsigned, used for packed factor-system codes.
// Codes need t*b bits; the largest case handled here is t*b = 35, but the
// width leaves room for larger quotients without changing the layout.
struct Code {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static Code from_u64(std::uint64_t x) { return Code{x, 0}; }

  static Code one_bit(int pos) {
    Code c;
    c.set_bit(pos);
    return c;
  }

  bool bit(int pos) const {
    return pos < 64 ? (lo >> pos) & 1u : (hi >> (pos - 64)) & 1u;
  }

  void set_bit(int pos) {
    if (pos < 64)
      lo |= std::uint64_t(1) << pos;
    else
      hi |= std::uint64_t(1) << (pos - 64);
  }

  bool is_zero() const { return lo == 0 && hi == 0; }

  // Index of the highest set bit, -1 if zero.
  int top_bit() const {
    if (hi != 0) return 127 - std::countl_zero(hi);
    if (lo != 0) return 63 - std::countl_zero(lo);
    return -1;
  }

  int popcount() const { return std::popcount(lo) + std::popcount(hi); }

  std::uint64_t to_u64() const {
    if (hi != 0) fail(Errc::unsupported, "code does not fit in 64 bits");
    return lo;
  }

  friend Code operator^(Code a, Code b) { return Code{a.lo ^ b.lo, a.hi ^ b.hi}; }
  Code& operator^=(Code b) {
    lo ^= b.lo;
    hi ^= b.hi;
    return *this;
  }

  friend bool operator==(const Code&, const Code&) = default;
  friend std::strong_ordering operator<=>(const Code& a, const Code& b) {
    if (a.hi != b.hi) return a.hi <=> b.hi;
    return a.lo <=> b.lo;
  }
};

// Decimal when the value fits in 64 bits, "0x..." hex otherwise.
std::string code_to_string(const Code& c);

// Accepts decimal or 0x-prefixed hex.
Code code_from_string(const std::string& s);

}  // namespace steiner
