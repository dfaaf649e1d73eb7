#pragma once

#include <array>

#include "motifcount/count.hpp"
#include "motifcount/dag.hpp"
#include "motifcount/four.hpp"
#include "motifcount/triad.hpp"

namespace motifcount {

// Pattern numbers below follow the 5-vertex catalog order (1-based).

struct VertexCut {
  Count n1 = 0, n3 = 0, n4 = 0, n7 = 0, n9 = 0, n15 = 0;
};
struct EdgeCut {
  Count n2 = 0, n5 = 0, n6 = 0, n11 = 0, n12 = 0, n14 = 0, n19 = 0;
};
struct TriangleCut {
  Count n10 = 0, n16 = 0, n20 = 0;
};
struct WedgeCut {
  Count n13 = 0, n17 = 0, n18 = 0;
};

// Patterns that split at a single vertex into smaller counted pieces.
VertexCut count_vertex_cut(const DegreeOrientedDag& dag, const TriangleStore& tri, const FourAux& aux);
// Patterns that split at an edge.
EdgeCut count_edge_cut(const DegreeOrientedDag& dag, const TriangleStore& tri, const FourAux& aux);
// Patterns that split at a triangle; needs per-triangle 4-clique counts.
TriangleCut count_triangle_cut(const DegreeOrientedDag& dag, const TriangleStore& tri, const FourAux& aux);
// Patterns that split at a non-adjacent pair or a wedge; needs triangle lists.
WedgeCut count_wedge_cut(const DegreeOrientedDag& dag, const TriangleStore& tri, unsigned threads = 1);

// 5-cycles, each found once from its largest vertex via a 3-path whose
// middle edge points forward.
Count count_five_cycles(const DegreeOrientedDag& dag, unsigned threads = 1);
// 5-cliques, each found once from its lowest triangle; needs triangle lists.
Count count_five_cliques(const DegreeOrientedDag& dag, const TriangleStore& tri);

struct FiveCounts {
  std::array<Count, 21> noninduced{};
  std::array<Count, 21> induced{};
};

// All 21 connected patterns. Throws BudgetError when the triangle lists were
// not materialized and IntegrityError on a negative induced count.
FiveCounts five_report(const DegreeOrientedDag& dag, const TriangleStore& tri, const FourAux& aux,
                       unsigned threads = 1);

}  // namespace motifcount
