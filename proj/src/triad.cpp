#include "motifcount/triad.hpp"

#include <algorithm>

#include "motifcount/simd/intersect.hpp"

namespace motifcount {

WedgeStats count_wedges(const DegreeOrientedDag& dag) {
  WedgeStats s;
  for (Vertex r = 0; r < dag.num_vertices(); ++r) {
    const Count out = dag.out_degree(r);
    const Count in = dag.in_degree(r);
    s.W_outout += choose(out, 2);
    s.W_inout += in * out;
    s.W_inin += choose(in, 2);
    s.W += choose(out + in, 2);
  }
  return s;
}

std::uint64_t TriangleStore::triangle_id(EdgeId xy, Vertex z) const {
  const auto up = upper(xy);
  const auto it = std::lower_bound(up.begin(), up.end(), z);
  return triangle_base_[xy] + static_cast<std::uint64_t>(it - up.begin());
}

std::uint64_t TriangleStore::list_bytes(std::uint64_t triangles, std::uint64_t edges) {
  // Pool entries, per-triangle 4-clique tallies, and the per-edge offsets.
  return 3 * triangles * sizeof(Vertex) + triangles * sizeof(std::uint64_t) +
         edges * (2 * sizeof(std::uint64_t) + sizeof(std::uint32_t));
}

std::size_t TriangleStore::memory_bytes() const {
  return vertex_.capacity() * sizeof(std::uint64_t) + edge_.capacity() * sizeof(std::uint32_t) +
         offset_.capacity() * sizeof(std::uint64_t) + lower_.capacity() * sizeof(std::uint32_t) +
         triangle_base_.capacity() * sizeof(std::uint64_t) + pool_.capacity() * sizeof(Vertex);
}

namespace {

// Calls f(a, b, c, e_ab, e_ac, e_bc) for every triangle a < b < c, in
// increasing (a, b, c) order.
template <class F>
void for_each_triangle(const DegreeOrientedDag& dag, F&& f) {
  std::size_t max_out = 0;
  for (Vertex r = 0; r < dag.num_vertices(); ++r) max_out = std::max(max_out, dag.out_degree(r));
  std::vector<std::uint32_t> pos_a(max_out), pos_b(max_out);
  for (Vertex a = 0; a < dag.num_vertices(); ++a) {
    const auto out_a = dag.out(a);
    for (std::size_t i = 0; i < out_a.size(); ++i) {
      const Vertex b = out_a[i];
      const EdgeId ab = dag.out_edge(a, i);
      // Only the part of out(a) above b can hold a common neighbour c > b.
      const auto tail = out_a.subspan(i + 1);
      const std::size_t hits = simd::intersect(tail, dag.out(b), pos_a.data(), pos_b.data());
      for (std::size_t h = 0; h < hits; ++h) {
        const std::size_t pa = i + 1 + pos_a[h];
        f(a, b, out_a[pa], ab, dag.out_edge(a, pa), dag.out_edge(b, pos_b[h]));
      }
    }
  }
}

}  // namespace

TriangleStore enumerate_triangles(const DegreeOrientedDag& dag, std::uint64_t list_budget) {
  TriangleStore s;
  const std::size_t n = dag.num_vertices();
  const std::size_t m = dag.num_edges();
  s.vertex_.assign(n, 0);
  s.edge_.assign(m, 0);
  std::vector<std::uint32_t> lowest(m, 0);  // triangles in which the edge is lowest

  for_each_triangle(dag, [&](Vertex a, Vertex b, Vertex c, EdgeId ab, EdgeId ac, EdgeId bc) {
    ++s.total_;
    ++s.vertex_[a];
    ++s.vertex_[b];
    ++s.vertex_[c];
    ++s.edge_[ab];
    ++s.edge_[ac];
    ++s.edge_[bc];
    ++lowest[ab];
  });

  if (TriangleStore::list_bytes(s.total_, m) > list_budget) return s;

  s.has_lists_ = true;
  s.offset_.assign(m + 1, 0);
  s.triangle_base_.assign(m + 1, 0);
  s.lower_.resize(m);
  for (EdgeId e = 0; e < m; ++e) {
    s.offset_[e + 1] = s.offset_[e] + s.edge_[e];
    s.triangle_base_[e + 1] = s.triangle_base_[e] + lowest[e];
    s.lower_[e] = s.edge_[e] - lowest[e];
  }
  s.pool_.resize(s.offset_[m]);

  // Appending in (a, b, c) order leaves every list sorted: completions below
  // the tail arrive from earlier a, then those between tail and head, then
  // those above the head.
  std::vector<std::uint64_t> cursor(s.offset_.begin(), s.offset_.end() - 1);
  for_each_triangle(dag, [&](Vertex a, Vertex b, Vertex c, EdgeId ab, EdgeId ac, EdgeId bc) {
    s.pool_[cursor[ab]++] = c;
    s.pool_[cursor[ac]++] = b;
    s.pool_[cursor[bc]++] = a;
  });
  return s;
}

}  // namespace motifcount
