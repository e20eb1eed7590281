#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace pm::kernels {

using Table = std::span<const std::uint8_t>;
using MutableTable = std::span<std::uint8_t>;

/// Table kernels over a rank table of length 2^n. Every variant computes the
/// same result as the scalar reference; the vector variants take over once a
/// table fills at least one register (n >= 5) and defer to scalar below that.
struct KernelSet {
  std::string_view name;
  /// r(0) = 0, r({e}) <= 2, monotone and submodular. Entries must be <= 64.
  bool (*axioms_hold)(Table t, int n);
  /// out[X] = t[X] + t[E - X] - t[E].
  void (*connectivity)(Table t, int n, MutableTable out);
  /// out[X] = ||X|| + t[E - X] - t[E].
  void (*dual)(Table t, int n, MutableTable out);
  /// out[X] = t[X] + sum of delta[x] over x in X, computed modulo 256.
  void (*add_weights)(Table t, int n, std::span<const std::int8_t> delta, MutableTable out);
  /// Exchanges the roles of elements i and i + 1, in place.
  void (*swap_adjacent)(MutableTable t, int n, int i);
  /// Three-way lexicographic comparison of equal-length tables.
  int (*compare)(Table a, Table b);
};

const KernelSet& scalar();
/// nullptr unless the build has AVX2 code and the CPU supports it.
const KernelSet* avx2();
/// Picked once: AVX2 when available, unless PM_KERNELS=scalar is set.
const KernelSet& active();
/// Overrides the active set (tests and benchmarks).
void set_active(const KernelSet& set);

}  // namespace pm::kernels
