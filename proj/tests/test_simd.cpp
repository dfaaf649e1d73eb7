#include <random>
#include <set>

#include "doctest.h"
#include "motifcount/simd/intersect.hpp"

using namespace motifcount::simd;

namespace {

std::vector<std::uint32_t> sorted_sample(std::mt19937& rng, std::size_t size, std::uint32_t universe) {
  std::set<std::uint32_t> s;
  std::uniform_int_distribution<std::uint32_t> pick(0, universe - 1);
  while (s.size() < size) s.insert(pick(rng));
  return {s.begin(), s.end()};
}

struct Matches {
  std::vector<std::uint32_t> a, b;
  bool operator==(const Matches&) const = default;
};

Matches run(IntersectFn f, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const std::size_t cap = std::min(a.size(), b.size());
  Matches m{std::vector<std::uint32_t>(cap), std::vector<std::uint32_t>(cap)};
  const std::size_t k = f(a, b, m.a.data(), m.b.data());
  m.a.resize(k);
  m.b.resize(k);
  return m;
}

}  // namespace

TEST_CASE("scalar kernel reports positions in both inputs") {
  const std::vector<std::uint32_t> a{1, 3, 5, 7, 9}, b{0, 3, 4, 9, 12};
  const auto m = run(intersect_scalar, a, b);
  CHECK(m.a == std::vector<std::uint32_t>{1, 4});
  CHECK(m.b == std::vector<std::uint32_t>{1, 3});
  CHECK(intersect_count_scalar(a, b) == 2);
  CHECK(intersect_count_scalar({}, b) == 0);
}

#if defined(MOTIFCOUNT_HAVE_AVX2)
TEST_CASE("avx2 kernels match the scalar reference") {
  if (!isa_supported(Isa::avx2)) {
    MESSAGE("CPU lacks AVX2; equivalence not exercised");
    return;
  }
  std::mt19937 rng(12345);
  const std::size_t sizes[] = {0, 1, 2, 7, 8, 9, 15, 16, 17, 31, 64, 100, 333};
  for (std::size_t sa : sizes) {
    for (std::size_t sb : sizes) {
      for (std::uint32_t universe : {40u, 500u, 100000u}) {
        if (sa > universe || sb > universe) continue;
        const auto a = sorted_sample(rng, sa, universe);
        const auto b = sorted_sample(rng, sb, universe);
        REQUIRE(run(intersect_avx2, a, b) == run(intersect_scalar, a, b));
        REQUIRE(intersect_count_avx2(a, b) == intersect_count_scalar(a, b));
      }
    }
  }
  // Values near the top of the range exercise unsigned comparisons.
  const std::vector<std::uint32_t> hi{0x7fffffffu, 0x80000000u, 0xfffffffeu, 0xffffffffu};
  CHECK(run(intersect_avx2, hi, hi) == run(intersect_scalar, hi, hi));
}
#endif

TEST_CASE("dispatcher honours forced selection") {
  const Isa original = active_isa();
  force_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  CHECK(isa_name(Isa::scalar) == "scalar");
  const std::vector<std::uint32_t> a{2, 4, 6}, b{4, 6, 8};
  CHECK(intersect_count(a, b) == 2);
  force_isa(original);
  CHECK(active_isa() == original);
}
