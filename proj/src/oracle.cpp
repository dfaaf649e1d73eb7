#include "motifcount/oracle.hpp"

#include <string>

#include "motifcount/pattern_catalog.hpp"

namespace motifcount {

OracleResult brute_force_induced(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1 || k > kMaxPatternSize) throw std::invalid_argument("oracle supports k = 1..5");
  const auto& catalog = PatternCatalog::instance();
  const std::size_t n = g.num_vertices();

  const Count subsets = choose(static_cast<Count>(n), k);
  if (subsets > static_cast<Count>(budget))
    throw BudgetError("brute force needs " + to_string(subsets) + " subsets, budget is " + std::to_string(budget),
                      static_cast<std::uint64_t>(subsets));

  OracleResult r;
  r.k = k;
  r.induced.assign(catalog.patterns(k).size(), 0);

  if (static_cast<std::size_t>(k) <= n) {
    std::vector<std::uint8_t> adj(n * n, 0);
    for (auto [u, v] : g.edges()) adj[u * n + v] = adj[v * n + u] = 1;

    std::vector<std::size_t> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    for (;;) {
      PairMask mask = 0;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (adj[pick[static_cast<std::size_t>(a)] * n + pick[static_cast<std::size_t>(b)]])
            mask |= PairMask(PairMask{1} << pair_bit(a, b));
      ++r.induced[static_cast<std::size_t>(catalog.classify(k, mask) - 1)];

      // Next combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(k - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  const IntMatrix& a = catalog.occurrence(k);
  r.noninduced.assign(r.induced.size(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.noninduced[i] += Count(a(i, j)) * r.induced[j];
  return r;
}

}  // namespace motifcount
