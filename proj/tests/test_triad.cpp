#include "brute.hpp"
#include "doctest.h"
#include "motifcount/triad.hpp"
#include "support.hpp"

using namespace motifcount;

TEST_CASE("wedge classes") {
  {
    const DegreeOrientedDag dag(testing::complete(4));
    const auto w = count_wedges(dag);
    CHECK(w.W == 12);
    CHECK(w.W_outout == 4);
    CHECK(w.W_inout == 4);
    CHECK(w.W_inin == 4);
  }
  {
    const DegreeOrientedDag dag(testing::star(4));
    const auto w = count_wedges(dag);
    CHECK(w.W == 6);
    CHECK(w.W_outout == 0);
    CHECK(w.W_inout == 0);
    CHECK(w.W_inin == 6);
  }
  CHECK(count_wedges(DegreeOrientedDag(testing::cycle(5))).W == 5);
}

TEST_CASE("triangles on closed cases") {
  const DegreeOrientedDag k4(testing::complete(4));
  const auto t = enumerate_triangles(k4);
  CHECK(t.total() == 4);
  for (EdgeId e = 0; e < 6; ++e) CHECK(t.edge_count(e) == 2);
  for (Vertex v = 0; v < 4; ++v) CHECK(t.vertex_count(v) == 3);

  const DegreeOrientedDag c5(testing::cycle(5));
  const auto z = enumerate_triangles(c5);
  CHECK(z.total() == 0);
  for (EdgeId e = 0; e < 5; ++e) CHECK(z.list(e).empty());
}

TEST_CASE("triangle store matches brute force") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = testing::erdos_renyi(8 + seed % 18, 0.1 + 0.1 * double(seed % 5), seed);
    const DegreeOrientedDag dag(g);
    const auto tri = enumerate_triangles(dag);
    const auto b = testing::brute_objects(g);
    const auto w = count_wedges(dag);
    CHECK(w.W == w.W_outout + w.W_inout + w.W_inin);

    CHECK(tri.total() == b.triangles);
    std::uint64_t sum_v = 0, sum_e = 0, pool = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      CHECK(tri.vertex_count(dag.rank_of(v)) == b.tri_v[v]);
      sum_v += tri.vertex_count(v);
    }
    std::vector<bool> id_seen(tri.total(), false);
    for (auto [u, v] : g.edges()) {
      const Vertex a = std::min(dag.rank_of(u), dag.rank_of(v)), c = std::max(dag.rank_of(u), dag.rank_of(v));
      const EdgeId e = dag.edge_id(a, c);
      CHECK(tri.edge_count(e) == b.tri_e.at({u, v}));
      sum_e += tri.edge_count(e);
      const auto list = tri.list(e);
      pool += list.size();
      CHECK(list.size() == tri.edge_count(e));
      CHECK(std::is_sorted(list.begin(), list.end()));
      std::vector<Vertex> original;
      for (Vertex x : list) original.push_back(dag.vertex_at(x));
      std::sort(original.begin(), original.end());
      CHECK(original == b.completions.at({u, v}));
      for (Vertex x : tri.upper(e)) {
        CHECK(x > c);
        const auto id = tri.triangle_id(e, x);
        REQUIRE(id < tri.total());
        CHECK_FALSE(id_seen[id]);
        id_seen[id] = true;
      }
    }
    CHECK(sum_v == 3 * tri.total());
    CHECK(sum_e == 3 * tri.total());
    CHECK(pool == 3 * tri.total());
    CHECK(std::all_of(id_seen.begin(), id_seen.end(), [](bool x) { return x; }));
  }
}

TEST_CASE("list budget falls back to counts only") {
  const Graph g = testing::complete(7);
  const DegreeOrientedDag dag(g);
  const auto full = enumerate_triangles(dag);
  const auto lean = enumerate_triangles(dag, 0);
  CHECK(full.has_lists());
  CHECK_FALSE(lean.has_lists());
  CHECK(lean.total() == 35);
  CHECK(lean.edge_counts() == full.edge_counts());
  CHECK(lean.vertex_counts() == full.vertex_counts());
  CHECK(lean.memory_bytes() < full.memory_bytes());
}
