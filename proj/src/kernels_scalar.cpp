#include "pm/kernels.hpp"
#include "kernels_internal.hpp"

namespace pm::kernels {

namespace {

bool axioms_hold(Table t, int n) {
  const std::uint32_t size = 1u << n;
  if (t[0] != 0) return false;
  for (int e = 0; e < n; ++e) {
    if (t[1u << e] > 2) return false;
  }
  for (std::uint32_t x = 0; x < size; ++x) {
    for (int a = 0; a < n; ++a) {
      const std::uint32_t xa = x | (1u << a);
      if (xa == x) continue;
      if (t[xa] < t[x]) return false;
      for (int b = a + 1; b < n; ++b) {
        const std::uint32_t xb = x | (1u << b);
        if (xb == x) continue;
        if (t[xa] + t[xb] < t[xa | xb] + t[x]) return false;
      }
    }
  }
  return true;
}

void connectivity(Table t, int n, MutableTable out) {
  const std::uint32_t full = (1u << n) - 1;
  const int whole = t[full];
  for (std::uint32_t x = 0; x <= full; ++x) {
    out[x] = static_cast<std::uint8_t>(t[x] + t[full ^ x] - whole);
  }
}

void subset_sums(int n, const std::int8_t* w, std::uint8_t* out) {
  out[0] = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t half = 1u << i;
    for (std::uint32_t x = 0; x < half; ++x) {
      out[half + x] = static_cast<std::uint8_t>(out[x] + w[i]);
    }
  }
}

void dual(Table t, int n, MutableTable out) {
  const std::uint32_t full = (1u << n) - 1;
  std::int8_t w[16];
  for (int i = 0; i < n; ++i) w[i] = static_cast<std::int8_t>(t[1u << i]);
  subset_sums(n, w, out.data());
  const int whole = t[full];
  for (std::uint32_t x = 0; x <= full; ++x) {
    out[x] = static_cast<std::uint8_t>(out[x] + t[full ^ x] - whole);
  }
}

void add_weights(Table t, int n, std::span<const std::int8_t> delta, MutableTable out) {
  subset_sums(n, delta.data(), out.data());
  for (std::size_t x = 0; x < t.size(); ++x) {
    out[x] = static_cast<std::uint8_t>(out[x] + t[x]);
  }
}

void swap_adjacent(MutableTable t, int n, int i) {
  const std::uint32_t lo = 1u << i;
  const std::uint32_t hi = 1u << (i + 1);
  const std::uint32_t size = 1u << n;
  for (std::uint32_t x = 0; x < size; ++x) {
    if ((x & lo) && !(x & hi)) std::swap(t[x], t[x ^ lo ^ hi]);
  }
}

int compare(Table a, Table b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

const KernelSet kScalar{"scalar", axioms_hold, connectivity, dual, add_weights, swap_adjacent, compare};

}  // namespace

const KernelSet& scalar() { return kScalar; }

}  // namespace pm::kernels
