#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace motifcount::simd {

// Intersection of two strictly increasing u32 sequences. Writes, for each
// common value in increasing order, its position in `a` and in `b`. Output
// buffers must hold min(|a|, |b|) entries. Returns the number of matches.
using IntersectFn = std::size_t (*)(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                    std::uint32_t* pos_a, std::uint32_t* pos_b);
using IntersectCountFn = std::size_t (*)(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

enum class Isa { scalar, avx2 };

// Scalar reference kernels: a plain merge.
std::size_t intersect_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                             std::uint32_t* pos_a, std::uint32_t* pos_b);
std::size_t intersect_count_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

#if defined(MOTIFCOUNT_HAVE_AVX2)
// 8x8 block compare. Only call when the CPU reports AVX2.
std::size_t intersect_avx2(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::uint32_t* pos_a, std::uint32_t* pos_b);
std::size_t intersect_count_avx2(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
#endif

// Best kernel set supported by this CPU. MOTIFCOUNT_SIMD=scalar in the
// environment forces the reference kernels.
Isa active_isa();
bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);
// Overrides the selection; throws std::invalid_argument if unsupported.
void force_isa(Isa isa);

std::size_t intersect(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t* pos_a,
                      std::uint32_t* pos_b);
std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

}  // namespace motifcount::simd
