#include "motifcount/simd/intersect.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace motifcount::simd {

namespace {

struct Kernels {
  IntersectFn intersect;
  IntersectCountFn count;
  Isa isa;
};

Kernels kernels_for(Isa isa) {
#if defined(MOTIFCOUNT_HAVE_AVX2)
  if (isa == Isa::avx2) return {intersect_avx2, intersect_count_avx2, Isa::avx2};
#endif
  (void)isa;
  return {intersect_scalar, intersect_count_scalar, Isa::scalar};
}

Kernels detect() {
  if (const char* env = std::getenv("MOTIFCOUNT_SIMD"); env != nullptr && std::string(env) == "scalar") {
    return kernels_for(Isa::scalar);
  }
  return kernels_for(isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar);
}

Kernels& current() {
  static Kernels k = detect();
  return k;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(MOTIFCOUNT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa active_isa() { return current().isa; }

void force_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("instruction set not supported: " + std::string(isa_name(isa)));
  current() = kernels_for(isa);
}

std::size_t intersect(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t* pos_a,
                      std::uint32_t* pos_b) {
  return current().intersect(a, b, pos_a, pos_b);
}

std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return current().count(a, b);
}

}  // namespace motifcount::simd
