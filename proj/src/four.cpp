#include "motifcount/four.hpp"

#include <algorithm>

#include "motifcount/pattern_catalog.hpp"
#include "motifcount/simd/intersect.hpp"

namespace motifcount {

FourSimple count_four_simple(const DegreeOrientedDag& dag, const TriangleStore& tri) {
  FourSimple s;
  for (Vertex r = 0; r < dag.num_vertices(); ++r) {
    const Count d = dag.degree(r);
    s.three_star += choose(d, 3);
    s.tailed_triangle += Count(tri.vertex_count(r)) * (d - 2);
  }
  for (EdgeId e = 0; e < dag.num_edges(); ++e) {
    const auto [a, b] = dag.endpoints(e);
    s.three_path += (Count(dag.degree(a)) - 1) * (Count(dag.degree(b)) - 1);
    s.diamond += choose(tri.edge_count(e), 2);
  }
  s.three_path -= 3 * Count(tri.total());
  return s;
}

FourCycles count_four_cycles(const DegreeOrientedDag& dag) {
  const std::size_t n = dag.num_vertices();
  FourCycles out;
  out.per_vertex.assign(n, 0);
  out.per_edge.assign(dag.num_edges(), 0);
  std::vector<std::uint32_t> cnt(n, 0);
  std::vector<Vertex> touched;

  for (Vertex h = 0; h < n; ++h) {
    const auto in_h = dag.in(h);
    for (Vertex k : in_h) {
      for (Vertex j : dag.neighbors(k)) {
        if (j >= h) break;
        if (cnt[j]++ == 0) touched.push_back(j);
      }
    }
    if (touched.empty()) continue;
    for (std::size_t i = 0; i < in_h.size(); ++i) {
      const Vertex k = in_h[i];
      const EdgeId hk = dag.edge_at(h, i);
      const auto nk = dag.neighbors(k);
      for (std::size_t s = 0; s < nk.size() && nk[s] < h; ++s) {
        const std::uint64_t others = cnt[nk[s]] - 1;
        out.per_edge[hk] += others;
        out.per_edge[dag.edge_at(k, s)] += others;
        out.per_vertex[k] += others;
      }
    }
    for (Vertex j : touched) {
      const auto c = static_cast<std::uint64_t>(choose(cnt[j], 2));
      out.total += c;
      out.per_vertex[h] += c;
      out.per_vertex[j] += c;
      cnt[j] = 0;
    }
    touched.clear();
  }
  return out;
}

FourCliques count_four_cliques(const DegreeOrientedDag& dag, const TriangleStore& tri) {
  const std::size_t n = dag.num_vertices();
  FourCliques out;
  out.per_vertex.assign(n, 0);
  out.per_edge.assign(dag.num_edges(), 0);
  if (tri.has_lists()) out.per_triangle.assign(tri.total(), 0);

  std::size_t max_out = 0;
  for (Vertex r = 0; r < n; ++r) max_out = std::max(max_out, dag.out_degree(r));
  std::vector<std::uint32_t> pos_a(max_out), pos_b(max_out), pos_s(max_out), pos_k(max_out);
  std::vector<Vertex> common(max_out);
  std::vector<EdgeId> edge_a(max_out), edge_b(max_out);

  for (Vertex a = 0; a < n; ++a) {
    const auto out_a = dag.out(a);
    for (std::size_t i = 0; i < out_a.size(); ++i) {
      const Vertex b = out_a[i];
      const EdgeId ab = dag.out_edge(a, i);
      const auto tail = out_a.subspan(i + 1);
      const std::size_t s = simd::intersect(tail, dag.out(b), pos_a.data(), pos_b.data());
      if (s < 2) continue;
      for (std::size_t x = 0; x < s; ++x) {
        common[x] = tail[pos_a[x]];
        edge_a[x] = dag.out_edge(a, i + 1 + pos_a[x]);
        edge_b[x] = dag.out_edge(b, pos_b[x]);
      }
      for (std::size_t x = 0; x + 1 < s; ++x) {
        const Vertex c = common[x];
        const std::span<const Vertex> rest(common.data() + x + 1, s - x - 1);
        const std::size_t hits = simd::intersect(rest, dag.out(c), pos_s.data(), pos_k.data());
        for (std::size_t h = 0; h < hits; ++h) {
          const std::size_t y = x + 1 + pos_s[h];
          const Vertex d = common[y];
          const EdgeId cd = dag.out_edge(c, pos_k[h]);
          ++out.total;
          for (Vertex v : {a, b, c, d}) ++out.per_vertex[v];
          for (EdgeId e : {ab, edge_a[x], edge_a[y], edge_b[x], edge_b[y], cd}) ++out.per_edge[e];
          if (tri.has_lists()) {
            ++out.per_triangle[tri.triangle_id(ab, c)];
            ++out.per_triangle[tri.triangle_id(ab, d)];
            ++out.per_triangle[tri.triangle_id(edge_a[x], d)];
            ++out.per_triangle[tri.triangle_id(edge_b[x], d)];
          }
        }
      }
    }
  }
  return out;
}

FourAux count_four(const DegreeOrientedDag& dag, const TriangleStore& tri) {
  FourAux aux;
  aux.simple = count_four_simple(dag, tri);
  aux.cycles = count_four_cycles(dag);
  aux.cliques = count_four_cliques(dag, tri);
  return aux;
}

FourCounts four_report(const FourAux& aux) {
  FourCounts r;
  r.noninduced = {aux.simple.three_star, aux.simple.three_path, aux.simple.tailed_triangle,
                  aux.cycles.total,      aux.simple.diamond,    aux.cliques.total};
  const auto induced = noninduced_to_induced(4, r.noninduced);
  std::copy(induced.begin(), induced.end(), r.induced.begin());
  return r;
}

}  // namespace motifcount
