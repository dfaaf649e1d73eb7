#include "motifcount/five.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "motifcount/parallel.hpp"
#include "motifcount/pattern_catalog.hpp"
#include "motifcount/simd/intersect.hpp"

namespace motifcount {

namespace {

void require_lists(const TriangleStore& tri) {
  if (!tri.has_lists())
    throw BudgetError("5-vertex counting needs triangle lists, which exceed the memory budget",
                      TriangleStore::list_bytes(tri.total(), tri.edge_counts().size()));
}

Count deg(const DegreeOrientedDag& dag, Vertex r) { return static_cast<Count>(dag.degree(r)); }

// Dense counters keyed by vertex, reset through the list of touched keys.
struct Tally {
  std::vector<std::uint32_t> value;
  std::vector<Vertex> touched;

  explicit Tally(std::size_t n) : value(n, 0) {}
  void bump(Vertex v) {
    if (value[v]++ == 0) touched.push_back(v);
  }
  template <class F>
  void drain(F&& f) {
    for (Vertex v : touched) {
      f(v, value[v]);
      value[v] = 0;
    }
    touched.clear();
  }
};

}  // namespace

VertexCut count_vertex_cut(const DegreeOrientedDag& dag, const TriangleStore& tri, const FourAux& aux) {
  VertexCut c;
  const Count D = aux.diamonds();
  const Count TT = aux.tailed_triangles();
  for (Vertex i = 0; i < dag.num_vertices(); ++i) {
    const Count d = deg(dag, i);
    const Count t = tri.vertex_count(i);
    c.n1 += choose(d, 4);
    c.n4 += t * choose(d - 2, 2);
    c.n7 += Count(aux.cycles.per_vertex[i]) * (d - 2);
    c.n9 += choose(t, 2);
    c.n15 += Count(aux.cliques.per_vertex[i]) * (d - 3);

    // Two 2-paths hanging off the center i.
    Count s1 = 0, s2 = 0;
    for (Vertex j : dag.neighbors(i)) {
      const Count x = deg(dag, j) - 1;
      s1 += x;
      s2 += x * x;
    }
    c.n3 += (s1 * s1 - s2) / 2;
  }
  c.n3 -= 4 * aux.cycles.total + 2 * TT + 3 * Count(tri.total());
  c.n7 -= 2 * D;
  c.n9 -= 2 * D;
  return c;
}

EdgeCut count_edge_cut(const DegreeOrientedDag& dag, const TriangleStore& tri, const FourAux& aux) {
  EdgeCut c;
  const Count D = aux.diamonds();
  for (EdgeId e = 0; e < dag.num_edges(); ++e) {
    const auto [a, b] = dag.endpoints(e);
    const Count da = deg(dag, a), db = deg(dag, b);
    const Count ta = tri.vertex_count(a), tb = tri.vertex_count(b);
    const Count te = tri.edge_count(e);
    c.n2 += choose(da - 1, 2) * (db - 1) + choose(db - 1, 2) * (da - 1);
    c.n5 += (ta - te) * (db - 1) + (tb - te) * (da - 1);
    c.n6 += te * (da - 2) * (db - 2);
    c.n11 += choose(te, 2) * (da - 3 + db - 3);
    c.n12 += Count(aux.cycles.per_edge[e]) * te;
    c.n14 += choose(te, 3);
    c.n19 += Count(aux.cliques.per_edge[e]) * (te - 2);
  }
  c.n2 -= 2 * aux.tailed_triangles();
  c.n5 -= 4 * D;
  c.n6 -= 2 * D;
  c.n12 -= 4 * D;
  return c;
}

TriangleCut count_triangle_cut(const DegreeOrientedDag& dag, const TriangleStore& tri, const FourAux& aux) {
  require_lists(tri);
  TriangleCut c;
  const auto& k4t = aux.cliques.per_triangle;
  for (EdgeId ab = 0; ab < dag.num_edges(); ++ab) {
    const auto [a, b] = dag.endpoints(ab);
    const auto up = tri.upper(ab);
    for (std::size_t p = 0; p < up.size(); ++p) {
      const Vertex k = up[p];
      const Count t_ab = Count(tri.edge_count(ab)) - 1;
      const Count t_ak = Count(tri.edge_count(dag.edge_id(a, k))) - 1;
      const Count t_bk = Count(tri.edge_count(dag.edge_id(b, k))) - 1;
      // Each edge's extra triangle pairs with a pendant edge at the opposite vertex.
      c.n10 += t_ab * (deg(dag, k) - 2) + t_ak * (deg(dag, b) - 2) + t_bk * (deg(dag, a) - 2);
      // Two extra triangles on the edges meeting at each corner.
      c.n16 += t_ab * t_ak + t_ab * t_bk + t_ak * t_bk;
      c.n20 += choose(k4t[tri.first_triangle(ab) + p], 2);
    }
  }
  c.n10 -= 12 * aux.cliques.total;
  c.n16 -= 12 * aux.cliques.total;
  return c;
}

namespace {

struct PairSums {
  Count n13 = 0;
  Count n17x2 = 0;  // diamonds are seen once per orientation of their chord
  PairSums& operator+=(const PairSums& o) {
    n13 += o.n13;
    n17x2 += o.n17x2;
    return *this;
  }
};

struct PairScratch {
  Tally wedges;    // W(i, j): common neighbours
  Tally diamonds;  // 2 D(i, j): ordered chords among the common neighbours
  explicit PairScratch(std::size_t n) : wedges(n), diamonds(n) {}
};

}  // namespace

WedgeCut count_wedge_cut(const DegreeOrientedDag& dag, const TriangleStore& tri, unsigned threads) {
  require_lists(tri);
  const std::size_t n = dag.num_vertices();
  WedgeCut c;

  const PairSums pairs = parallel_reduce<PairSums>(
      n, threads, [n] { return PairScratch(n); },
      [&](PairScratch& s, std::size_t begin, std::size_t end, PairSums& out) {
        for (Vertex i = static_cast<Vertex>(begin); i < end; ++i) {
          const auto ni = dag.neighbors(i);
          for (Vertex k : ni)
            for (Vertex j : dag.neighbors(k))
              if (j > i) s.wedges.bump(j);
          for (std::size_t slot = 0; slot < ni.size(); ++slot) {
            const Vertex k = ni[slot];
            for (Vertex l : tri.list(dag.edge_at(i, slot))) {
              const auto kl = k < l ? dag.edge_id(k, l) : dag.edge_id(l, k);
              for (Vertex j : tri.list(kl))
                if (j > i) s.diamonds.bump(j);
            }
          }
          s.diamonds.drain([&](Vertex j, std::uint32_t d2) {
            out.n17x2 += Count(d2) * (Count(s.wedges.value[j]) - 2);
          });
          s.wedges.drain([&](Vertex, std::uint32_t w) { out.n13 += choose(w, 3); });
        }
      });
  c.n13 = pairs.n13;
  c.n17 = pairs.n17x2 / 2;

  // Hub h with two rim vertices a < c: their common neighbours inside N(h).
  const Count wheel_x2 = parallel_reduce<Count>(
      n, threads, [n] { return Tally(n); },
      [&](Tally& cnt, std::size_t begin, std::size_t end, Count& out) {
        for (Vertex h = static_cast<Vertex>(begin); h < end; ++h) {
          const auto nh = dag.neighbors(h);
          for (std::size_t slot = 0; slot < nh.size(); ++slot) {
            const Vertex a = nh[slot];
            for (Vertex b : tri.list(dag.edge_at(h, slot))) {
              const auto hb = h < b ? dag.edge_id(h, b) : dag.edge_id(b, h);
              for (Vertex x : tri.list(hb))
                if (x > a) cnt.bump(x);
            }
            cnt.drain([&](Vertex, std::uint32_t v) { out += choose(v, 2); });
          }
        }
      });
  c.n18 = wheel_x2 / 2;
  return c;
}

namespace {

struct CycleScratch {
  std::vector<std::uint32_t> near_h;  // stamp: adjacent to the current h
  std::vector<std::uint32_t> near_y;  // stamp: adjacent to the current y
  Tally closers;                      // vertices below h adjacent to i and h
  Tally paths;                        // directed 3-paths h-y-z-i ending at i
  std::uint32_t h_stamp = 0;
  std::uint32_t y_stamp = 0;
  explicit CycleScratch(std::size_t n) : near_h(n, 0), near_y(n, 0), closers(n), paths(n) {}
};

}  // namespace

Count count_five_cycles(const DegreeOrientedDag& dag, unsigned threads) {
  const std::size_t n = dag.num_vertices();
  return parallel_reduce<Count>(
      n, threads, [n] { return CycleScratch(n); },
      [&](CycleScratch& s, std::size_t begin, std::size_t end, Count& out) {
        for (Vertex h = static_cast<Vertex>(begin); h < end; ++h) {
          const auto in_h = dag.in(h);
          if (in_h.size() < 2) continue;
          ++s.h_stamp;
          for (Vertex v : dag.neighbors(h)) s.near_h[v] = s.h_stamp;
          for (Vertex x : in_h)
            for (Vertex i : dag.neighbors(x)) {
              if (i >= h) break;
              s.closers.bump(i);
            }

          // Cycle h-y-z-i-x-h with y, x below h and z < i. The product
          // P(i) * closers(i) also admits x = y (when y ~ i) and x = z
          // (when z ~ h); those are tallied in `overlap`.
          Count overlap = 0;
          for (Vertex y : in_h) {
            ++s.y_stamp;
            for (Vertex v : dag.neighbors(y)) s.near_y[v] = s.y_stamp;
            for (Vertex z : dag.neighbors(y)) {
              if (z >= h) break;
              const bool z_near_h = s.near_h[z] == s.h_stamp;
              for (Vertex i : dag.out(z)) {
                if (i >= h) break;
                if (i == y) continue;
                s.paths.bump(i);
                overlap += (s.near_y[i] == s.y_stamp) + z_near_h;
              }
            }
          }
          Count total = 0;
          s.paths.drain([&](Vertex i, std::uint32_t p) { total += Count(p) * s.closers.value[i]; });
          s.closers.drain([](Vertex, std::uint32_t) {});
          out += total - overlap;
        }
      });
}

Count count_five_cliques(const DegreeOrientedDag& dag, const TriangleStore& tri) {
  require_lists(tri);
  Count total = 0;
  std::vector<Vertex> common;
  std::vector<std::uint32_t> pa, pb;
  for (EdgeId ij = 0; ij < dag.num_edges(); ++ij) {
    const auto [i, j] = dag.endpoints(ij);
    const auto out_i = dag.out(i);
    for (Vertex k : tri.upper(ij)) {
      // Vertices above k completing triangles on (j, k) and adjacent to i.
      const auto above = tri.upper(dag.edge_id(j, k));
      if (above.size() < 2) continue;
      const std::size_t cap = std::min(above.size(), out_i.size());
      common.resize(cap);
      pa.resize(cap);
      pb.resize(cap);
      const std::size_t s = simd::intersect(above, out_i, pa.data(), pb.data());
      for (std::size_t x = 0; x < s; ++x) common[x] = above[pa[x]];
      for (std::size_t x = 0; x + 1 < s; ++x) {
        const std::span<const Vertex> rest(common.data() + x + 1, s - x - 1);
        total += simd::intersect_count(rest, dag.out(common[x]));
      }
    }
  }
  return total;
}

FiveCounts five_report(const DegreeOrientedDag& dag, const TriangleStore& tri, const FourAux& aux,
                       unsigned threads) {
  FiveCounts r;
  if (dag.num_vertices() < 5) return r;
  require_lists(tri);

  const VertexCut v = count_vertex_cut(dag, tri, aux);
  const EdgeCut e = count_edge_cut(dag, tri, aux);
  const TriangleCut t = count_triangle_cut(dag, tri, aux);
  const WedgeCut w = count_wedge_cut(dag, tri, threads);
  const Count n8 = count_five_cycles(dag, threads);
  const Count n21 = count_five_cliques(dag, tri);

  r.noninduced = {v.n1, e.n2,  v.n3,  v.n4,  e.n5,  e.n6,  v.n7,  n8,    v.n9,  t.n10, e.n11,
                  e.n12, w.n13, e.n14, v.n15, t.n16, w.n17, w.n18, e.n19, t.n20, n21};
  const auto induced = noninduced_to_induced(r.noninduced);
  std::copy(induced.begin(), induced.end(), r.induced.begin());
  return r;
}

}  // namespace motifcount
