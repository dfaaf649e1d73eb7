#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "motifcount/count.hpp"
#include "motifcount/dag.hpp"
#include "motifcount/triad.hpp"

namespace motifcount {

// Non-induced counts of the four tree/triangle patterns that follow from
// degrees and triangle counts alone.
struct FourSimple {
  Count three_star = 0;
  Count three_path = 0;
  Count tailed_triangle = 0;
  Count diamond = 0;
};

FourSimple count_four_simple(const DegreeOrientedDag& dag, const TriangleStore& tri);

struct FourCycles {
  Count total = 0;
  std::vector<std::uint64_t> per_vertex;  // rank space
  std::vector<std::uint64_t> per_edge;    // dense edge ids
};

// Groups 4-cycles by their largest vertex h: for every j < h the common
// neighbours of h and j below h pair up into cycles h-k-j-k'.
FourCycles count_four_cycles(const DegreeOrientedDag& dag);

struct FourCliques {
  Count total = 0;
  std::vector<std::uint64_t> per_vertex;
  std::vector<std::uint64_t> per_edge;
  std::vector<std::uint64_t> per_triangle;  // empty unless tri has lists
};

// Every 4-clique a < b < c < d is found once, from edge (a, b), as an
// adjacent pair among the common out-neighbours of a and b.
FourCliques count_four_cliques(const DegreeOrientedDag& dag, const TriangleStore& tri);

// Everything the 5-vertex formulas need from the 4-vertex stage.
struct FourAux {
  FourSimple simple;
  FourCycles cycles;
  FourCliques cliques;
  Count diamonds() const { return simple.diamond; }
  Count tailed_triangles() const { return simple.tailed_triangle; }
};

FourAux count_four(const DegreeOrientedDag& dag, const TriangleStore& tri);

struct FourCounts {
  std::array<Count, 6> noninduced{};
  std::array<Count, 6> induced{};
};

// Catalog order: three_star, three_path, tailed_triangle, four_cycle,
// diamond, four_clique. Throws IntegrityError on a negative induced count.
FourCounts four_report(const FourAux& aux);

}  // namespace motifcount
