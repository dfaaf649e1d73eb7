#include "motifcount/simd/intersect.hpp"

namespace motifcount::simd {

std::size_t intersect_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                             std::uint32_t* pos_a, std::uint32_t* pos_b) {
  std::size_t i = 0, j = 0, k = 0;
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

std::size_t intersect_count_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::size_t i = 0, j = 0, k = 0;
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
