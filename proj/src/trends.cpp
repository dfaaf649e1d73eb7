#include "motifcount/trends.hpp"

#include "motifcount/pattern_catalog.hpp"
#include "motifcount/report.hpp"

namespace motifcount {

std::optional<double> ratio(Count num, Count den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

Trends compute_trends(const std::map<int, SizeCounts>& counts) {
  const auto& catalog = PatternCatalog::instance();
  Trends t;
  for (const auto& [k, s] : counts) {
    if (k < 4) continue;
    for (std::size_t i = 0; i < s.induced.size(); ++i) {
      const auto r = ratio(s.induced[i], s.noninduced[i]);
      t.edge_likelihood[catalog.connected(k)[i].id] = r ? std::optional<double>(1.0 - *r) : std::nullopt;
    }
  }
  if (auto it = counts.find(4); it != counts.end()) {
    const auto& c = it->second.induced;
    t.four_cycle_closure = ratio(c[4], c[3] + c[4]);
  }
  if (auto it = counts.find(5); it != counts.end()) {
    const auto& c = it->second.induced;
    const auto& n = it->second.noninduced;
    auto C = [&](int i) { return c[static_cast<std::size_t>(i - 1)]; };
    auto N = [&](int i) { return n[static_cast<std::size_t>(i - 1)]; };
    t.k23_closure = ratio(C(14), C(13) + C(14));
    t.wheel_in_near_clique = ratio(3 * C(20), N(18));
    t.ear_in_near_clique = ratio(6 * C(20), N(19));
    if (t.wheel_in_near_clique && t.ear_in_near_clique && *t.wheel_in_near_clique != 0)
      t.near_clique_ratio = *t.ear_in_near_clique / *t.wheel_in_near_clique;
    t.ear_to_wheel = ratio(C(19), C(18));
  }
  return t;
}

}  // namespace motifcount
