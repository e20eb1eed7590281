#pragma once

#include <bit>
#include <cstdint>

namespace pm {

/// A subset of the ground set: bit i stands for elements()[i].
using Subset = std::uint32_t;

inline constexpr int kMaxElements = 16;

constexpr Subset bit(int i) { return Subset{1} << i; }
constexpr Subset full_set(int n) { return (Subset{1} << n) - 1; }
constexpr bool has(Subset s, int i) { return ((s >> i) & 1u) != 0; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr int card(Subset s) { return std::popcount(s); }
constexpr int lowest(Subset s) { return std::countr_zero(s); }

/// Visits every subset of s in increasing bitmask order.
template <typename Fn>
void for_each_subset(Subset s, Fn&& fn) {
  Subset sub = 0;
  do {
    fn(sub);
    sub = (sub - s) & s;
  } while (sub != 0);
}

/// Visits the indices of s in increasing order.
template <typename Fn>
void for_each_index(Subset s, Fn&& fn) {
  while (s != 0) {
    fn(lowest(s));
    s &= s - 1;
  }
}

/// Packs the bits of x selected by mask into the low bits (bit-gather).
constexpr Subset pack_bits(Subset x, Subset mask) {
  Subset out = 0;
  int k = 0;
  for (Subset m = mask; m != 0; m &= m - 1, ++k) {
    if (x & (m & -m)) out |= bit(k);
  }
  return out;
}

/// Inverse of pack_bits: spreads the low bits of x onto the positions of mask.
constexpr Subset unpack_bits(Subset x, Subset mask) {
  Subset out = 0;
  int k = 0;
  for (Subset m = mask; m != 0; m &= m - 1, ++k) {
    if (has(x, k)) out |= (m & -m);
  }
  return out;
}

}  // namespace pm
