#include "kernels_internal.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

#include <cstring>

namespace pm::kernels {

namespace {

constexpr int kLog = 5;  // 32 table entries per register

inline __m256i load(const std::uint8_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint8_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// out[k] = v[idx[k]] across both lanes, idx in 0..31.
inline __m256i shuffle32(__m256i v, __m256i idx) {
  const __m256i lo = _mm256_permute2x128_si256(v, v, 0x00);
  const __m256i hi = _mm256_permute2x128_si256(v, v, 0x11);
  const __m256i from_lo = _mm256_shuffle_epi8(lo, idx);
  const __m256i from_hi = _mm256_shuffle_epi8(hi, idx);
  return _mm256_blendv_epi8(from_lo, from_hi, _mm256_slli_epi16(idx, 3));
}

inline bool all_set(__m256i mask) { return _mm256_movemask_epi8(mask) == -1; }

struct Patterns {
  __m256i or_with[32];
  __m256i swap[4];
  __m256i reverse;

  Patterns() {
    alignas(32) std::uint8_t buf[32];
    for (int m = 0; m < 32; ++m) {
      for (int k = 0; k < 32; ++k) buf[k] = static_cast<std::uint8_t>(k | m);
      or_with[m] = load(buf);
    }
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 32; ++k) {
        int lo = (k >> i) & 1;
        int hi = (k >> (i + 1)) & 1;
        int x = k & ~((1 << i) | (1 << (i + 1)));
        buf[k] = static_cast<std::uint8_t>(x | (hi << i) | (lo << (i + 1)));
      }
      swap[i] = load(buf);
    }
    for (int k = 0; k < 32; ++k) buf[k] = static_cast<std::uint8_t>(31 - k);
    reverse = load(buf);
  }
};

const Patterns& patterns() {
  static const Patterns p;
  return p;
}

// Entries t[X | m] for the 32 subsets X of block `block`.
inline __m256i load_or(const std::uint8_t* t, std::uint32_t block, std::uint32_t m) {
  __m256i v = load(t + ((block | (m >> kLog)) << kLog));
  if (m & 31u) v = shuffle32(v, patterns().or_with[m & 31u]);
  return v;
}

// Weight sums over the low five bits, as one register of 32 lanes.
inline __m256i low_sums(const std::int8_t* w) {
  alignas(32) std::int8_t buf[32];
  buf[0] = 0;
  for (int i = 0; i < kLog; ++i) {
    for (int x = 0; x < (1 << i); ++x) buf[(1 << i) + x] = static_cast<std::int8_t>(buf[x] + w[i]);
  }
  return load(reinterpret_cast<const std::uint8_t*>(buf));
}

inline std::int8_t high_sum(const std::int8_t* w, int n, std::uint32_t block) {
  int s = 0;
  for (int i = kLog; i < n; ++i) {
    if ((block >> (i - kLog)) & 1u) s += w[i];
  }
  return static_cast<std::int8_t>(s);
}

bool axioms_hold(Table t, int n) {
  if (n < kLog) return scalar().axioms_hold(t, n);
  if (t[0] != 0) return false;
  for (int e = 0; e < n; ++e) {
    if (t[1u << e] > 2) return false;
  }
  const std::uint8_t* p = t.data();
  const std::uint32_t blocks = 1u << (n - kLog);
  for (std::uint32_t b = 0; b < blocks; ++b) {
    const __m256i v = load(p + (b << kLog));
    __m256i single[16];
    for (int a = 0; a < n; ++a) {
      single[a] = load_or(p, b, 1u << a);
      if (!all_set(_mm256_cmpeq_epi8(_mm256_max_epu8(v, single[a]), single[a]))) return false;
    }
    for (int a = 0; a < n; ++a) {
      for (int c = a + 1; c < n; ++c) {
        const __m256i both = load_or(p, b, (1u << a) | (1u << c));
        const __m256i lhs = _mm256_adds_epu8(single[a], single[c]);
        const __m256i rhs = _mm256_adds_epu8(v, both);
        if (!all_set(_mm256_cmpeq_epi8(_mm256_max_epu8(lhs, rhs), lhs))) return false;
      }
    }
  }
  return true;
}

// out[X] = t[E - X] for the block holding X.
inline __m256i complement_block(const std::uint8_t* t, std::uint32_t blocks, std::uint32_t b) {
  return shuffle32(load(t + ((blocks - 1 - b) << kLog)), patterns().reverse);
}

void connectivity(Table t, int n, MutableTable out) {
  if (n < kLog) return scalar().connectivity(t, n, out);
  const std::uint32_t blocks = 1u << (n - kLog);
  const __m256i whole = _mm256_set1_epi8(static_cast<char>(t[t.size() - 1]));
  for (std::uint32_t b = 0; b < blocks; ++b) {
    __m256i v = _mm256_add_epi8(load(t.data() + (b << kLog)), complement_block(t.data(), blocks, b));
    store(out.data() + (b << kLog), _mm256_sub_epi8(v, whole));
  }
}

void dual(Table t, int n, MutableTable out) {
  if (n < kLog) return scalar().dual(t, n, out);
  std::int8_t w[16];
  for (int i = 0; i < n; ++i) w[i] = static_cast<std::int8_t>(t[1u << i]);
  const __m256i low = low_sums(w);
  const std::uint32_t blocks = 1u << (n - kLog);
  const __m256i whole = _mm256_set1_epi8(static_cast<char>(t[t.size() - 1]));
  for (std::uint32_t b = 0; b < blocks; ++b) {
    __m256i v = _mm256_add_epi8(low, _mm256_set1_epi8(high_sum(w, n, b)));
    v = _mm256_add_epi8(v, complement_block(t.data(), blocks, b));
    store(out.data() + (b << kLog), _mm256_sub_epi8(v, whole));
  }
}

void add_weights(Table t, int n, std::span<const std::int8_t> delta, MutableTable out) {
  if (n < kLog) return scalar().add_weights(t, n, delta, out);
  const __m256i low = low_sums(delta.data());
  const std::uint32_t blocks = 1u << (n - kLog);
  for (std::uint32_t b = 0; b < blocks; ++b) {
    __m256i v = _mm256_add_epi8(load(t.data() + (b << kLog)), low);
    store(out.data() + (b << kLog), _mm256_add_epi8(v, _mm256_set1_epi8(high_sum(delta.data(), n, b))));
  }
}

void swap_adjacent(MutableTable t, int n, int i) {
  if (n < kLog) return scalar().swap_adjacent(t, n, i);
  std::uint8_t* p = t.data();
  const std::uint32_t blocks = 1u << (n - kLog);
  if (i < kLog - 1) {
    const __m256i idx = patterns().swap[i];
    for (std::uint32_t b = 0; b < blocks; ++b) store(p + (b << kLog), shuffle32(load(p + (b << kLog)), idx));
  } else if (i == kLog - 1) {
    // Bit 4 selects the lane, bit 5 the register: trade lanes across register pairs.
    for (std::uint32_t b = 0; b < blocks; b += 2) {
      const __m256i x = load(p + (b << kLog));
      const __m256i y = load(p + ((b + 1) << kLog));
      store(p + (b << kLog), _mm256_permute2x128_si256(x, y, 0x20));
      store(p + ((b + 1) << kLog), _mm256_permute2x128_si256(x, y, 0x31));
    }
  } else {
    const std::uint32_t lo = 1u << (i - kLog);
    const std::uint32_t hi = lo << 1;
    for (std::uint32_t b = 0; b < blocks; ++b) {
      if ((b & lo) && !(b & hi)) {
        const std::uint32_t c = b ^ lo ^ hi;
        const __m256i x = load(p + (b << kLog));
        store(p + (b << kLog), load(p + (c << kLog)));
        store(p + (c << kLog), x);
      }
    }
  }
}

int compare(Table a, Table b) {
  const std::size_t whole = a.size() & ~std::size_t{31};
  for (std::size_t i = 0; i < whole; i += 32) {
    const __m256i x = load(a.data() + i);
    const __m256i y = load(b.data() + i);
    const unsigned eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, y)));
    if (eq != 0xffffffffu) {
      const std::size_t k = i + static_cast<std::size_t>(__builtin_ctz(~eq));
      return a[k] < b[k] ? -1 : 1;
    }
  }
  for (std::size_t i = whole; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

const KernelSet kAvx2{"avx2", axioms_hold, connectivity, dual, add_weights, swap_adjacent, compare};

}  // namespace

namespace detail {
const KernelSet* avx2_compiled() { return &kAvx2; }
}  // namespace detail

}  // namespace pm::kernels

#else

namespace pm::kernels::detail {
const KernelSet* avx2_compiled() { return nullptr; }
}  // namespace pm::kernels::detail

#endif
