// Compiled with -mavx2; reached only through the runtime dispatcher.

#include <immintrin.h>

#include "motifcount/simd/intersect.hpp"

namespace motifcount::simd {

namespace {

// Lanes of `va` equal to some lane of `vb`, as an 8-bit mask.
inline unsigned block_match(__m256i va, __m256i vb) {
  const __m256i rot = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);
  __m256i hits = _mm256_cmpeq_epi32(va, vb);
  for (int r = 1; r < 8; ++r) {
    vb = _mm256_permutevar8x32_epi32(vb, rot);
    hits = _mm256_or_si256(hits, _mm256_cmpeq_epi32(va, vb));
  }
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hits)));
}

inline __m256i load8(const std::uint32_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

}  // namespace

std::size_t intersect_avx2(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::uint32_t* pos_a, std::uint32_t* pos_b) {
  std::size_t i = 0, j = 0, k = 0;
  while (i + 8 <= a.size() && j + 8 <= b.size()) {
    const __m256i va = load8(a.data() + i);
    const __m256i vb = load8(b.data() + j);
    unsigned mask = block_match(va, vb);
    while (mask != 0) {
      const unsigned lane = static_cast<unsigned>(__builtin_ctz(mask));
      mask &= mask - 1;
      const __m256i needle = _mm256_set1_epi32(static_cast<int>(a[i + lane]));
      const unsigned where = static_cast<unsigned>(
          _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(needle, vb))));
      pos_a[k] = static_cast<std::uint32_t>(i + lane);
      pos_b[k] = static_cast<std::uint32_t>(j + static_cast<unsigned>(__builtin_ctz(where)));
      ++k;
    }
    const std::uint32_t a_max = a[i + 7];
    const std::uint32_t b_max = b[j + 7];
    if (a_max <= b_max) i += 8;
    if (b_max <= a_max) j += 8;
  }
  // Tail merge. Values of a[i..] matched above are below b[j], so they are
  // skipped here rather than reported twice.
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      pos_a[k] = static_cast<std::uint32_t>(i++);
      pos_b[k] = static_cast<std::uint32_t>(j++);
      ++k;
    }
  }
  return k;
}

std::size_t intersect_count_avx2(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::size_t i = 0, j = 0, k = 0;
  while (i + 8 <= a.size() && j + 8 <= b.size()) {
    k += static_cast<std::size_t>(__builtin_popcount(block_match(load8(a.data() + i), load8(b.data() + j))));
    const std::uint32_t a_max = a[i + 7];
    const std::uint32_t b_max = b[j + 7];
    if (a_max <= b_max) i += 8;
    if (b_max <= a_max) j += 8;
  }
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++i;
      ++j;
      ++k;
    }
  }
  return k;
}

}  // namespace motifcount::simd
