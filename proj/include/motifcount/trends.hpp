#pragma once

#include <map>
#include <optional>
#include <string>

#include "motifcount/count.hpp"

namespace motifcount {

// Ratios over induced (C) and non-induced (N) counts. A ratio whose
// denominator is zero is absent (serialized as null).
struct Trends {
  // 1 - C/N per connected pattern id ("4-5", "5-8", ...): the chance that a
  // non-induced copy picks up at least one extra edge.
  std::map<std::string, std::optional<double>> edge_likelihood;

  // Closure of a 4-cycle into a diamond: C(diamond) / (C(four_cycle) + C(diamond)).
  std::optional<double> four_cycle_closure;
  // Same for K2,3 gaining a side edge: C(5-14) / (C(5-13) + C(5-14)).
  std::optional<double> k23_closure;

  // How often a wheel or a K4-plus-ear sits inside an induced K5 minus an
  // edge, and how common the ear pattern is relative to the wheel.
  std::optional<double> wheel_in_near_clique;       // 3 C20 / N18
  std::optional<double> ear_in_near_clique;         // 6 C20 / N19
  std::optional<double> near_clique_ratio;          // the two above, ear over wheel
  std::optional<double> ear_to_wheel;               // C19 / C18
};

struct SizeCounts;

// Needs the 5-vertex counts; 4-vertex entries are filled when present.
Trends compute_trends(const std::map<int, SizeCounts>& counts);

std::optional<double> ratio(Count num, Count den);

}  // namespace motifcount
