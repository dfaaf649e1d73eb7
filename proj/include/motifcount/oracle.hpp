#pragma once

#include <cstdint>
#include <vector>

#include "motifcount/count.hpp"
#include "motifcount/graph.hpp"

namespace motifcount {

constexpr std::uint64_t kDefaultOracleBudget = 5'000'000;

// Exact counts over every k-vertex pattern in catalog order (connected
// patterns first, then disconnected).
struct OracleResult {
  int k = 0;
  std::vector<Count> induced;
  std::vector<Count> noninduced;  // A * induced over the full catalog
};

// Classifies every k-subset of vertices. Throws BudgetError carrying C(n, k)
// when that exceeds `budget`.
OracleResult brute_force_induced(const Graph& g, int k, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace motifcount
