#include "doctest.h"
#include "motifcount/oracle.hpp"
#include "motifcount/pattern_catalog.hpp"
#include "support.hpp"

using namespace motifcount;

TEST_CASE("oracle closed cases") {
  const auto k4 = brute_force_induced(testing::complete(4), 4);
  for (std::size_t i = 0; i < k4.induced.size(); ++i) CHECK(k4.induced[i] == (i == 5 ? 1 : 0));

  const auto c5 = brute_force_induced(testing::cycle(5), 5);
  for (std::size_t i = 0; i < c5.induced.size(); ++i) CHECK(c5.induced[i] == (i == 7 ? 1 : 0));
}

TEST_CASE("oracle counts sum to the number of subsets") {
  const Graph g = testing::erdos_renyi(12, 0.3, 5);
  for (int k = 1; k <= 5; ++k) {
    const auto o = brute_force_induced(g, k);
    Count sum = 0;
    for (Count c : o.induced) sum += c;
    CHECK(sum == choose(12, k));
  }
  CHECK(brute_force_induced(g, 5).induced.size() == 34);
}

TEST_CASE("oracle is permutation invariant") {
  const Graph g = testing::erdos_renyi(11, 0.4, 8);
  CHECK(brute_force_induced(g, 5).induced == brute_force_induced(testing::relabel(g, 3), 5).induced);
}

TEST_CASE("labelled matches equal automorphisms times unlabelled count") {
  // Count labelled matches of each 4-pattern directly: injective maps from
  // pattern vertices to graph vertices preserving edges and non-edges.
  const Graph g = testing::erdos_renyi(8, 0.45, 21);
  const auto& cat = PatternCatalog::instance();
  const auto o = brute_force_induced(g, 4);
  const Vertex n = static_cast<Vertex>(g.num_vertices());
  for (const Pattern& p : cat.patterns(4)) {
    Count labelled = 0;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        for (Vertex c = 0; c < n; ++c)
          for (Vertex d = 0; d < n; ++d) {
            const Vertex m[4] = {a, b, c, d};
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            bool ok = true;
            for (int x = 0; x < 4 && ok; ++x)
              for (int y = x + 1; y < 4 && ok; ++y) {
                const bool want = p.mask & (1u << pair_bit(x, y));
                ok = g.has_edge(m[x], m[y]) == want;
              }
            labelled += ok;
          }
    CHECK(labelled == Count(p.automorphisms) * o.induced[static_cast<std::size_t>(p.index - 1)]);
  }
}

TEST_CASE("oracle refuses over budget") {
  try {
    brute_force_induced(testing::complete(30), 5, 1000);
    FAIL("expected a budget error");
  } catch (const BudgetError& e) {
    CHECK(e.required() == 142506);
  }
}
