#include "doctest.h"
#include "motifcount/dag.hpp"
#include "support.hpp"

using namespace motifcount;

namespace {
bool precedes(const Graph& g, Vertex u, Vertex v) {
  return g.degree(u) < g.degree(v) || (g.degree(u) == g.degree(v) && u < v);
}
}  // namespace

TEST_CASE("path endpoints point at the middle") {
  const Graph g = testing::make_graph(3, {{0, 1}, {1, 2}});
  const DegreeOrientedDag dag(g);
  auto d = dag.directed_edges();
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 1}});
}

TEST_CASE("degree ties break by id") {
  const DegreeOrientedDag k3(testing::complete(3));
  auto d = k3.directed_edges();
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}});

  const DegreeOrientedDag k4(testing::complete(4));
  for (Vertex v = 0; v < 4; ++v) CHECK(k4.out_neighbors_of(v).size() == 3 - v);
}

TEST_CASE("orientation invariants and edge ids on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = testing::erdos_renyi(40, 0.15, seed);
    const DegreeOrientedDag dag(g);
    const auto directed = dag.directed_edges();
    CHECK(directed.size() == g.num_edges());

    std::vector<std::pair<Vertex, Vertex>> undirected;
    for (auto [u, v] : directed) {
      CHECK(precedes(g, u, v));
      undirected.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(undirected.begin(), undirected.end());
    CHECK(undirected == g.edges());

    // Rank order is a topological order, and rank lists split at r.
    std::vector<bool> seen(g.num_edges(), false);
    for (Vertex r = 0; r < dag.num_vertices(); ++r) {
      CHECK(dag.out_degree(r) + dag.in_degree(r) == dag.degree(r));
      for (Vertex x : dag.in(r)) CHECK(x < r);
      for (std::size_t i = 0; i < dag.out(r).size(); ++i) {
        const Vertex x = dag.out(r)[i];
        CHECK(x > r);
        const EdgeId e = dag.out_edge(r, i);
        CHECK(dag.edge_id(r, x) == e);
        CHECK(dag.endpoints(e) == std::pair<Vertex, Vertex>{r, x});
        seen[e] = true;
      }
      for (std::size_t i = 0; i < dag.neighbors(r).size(); ++i) {
        const Vertex x = dag.neighbors(r)[i];
        CHECK(dag.edge_at(r, i) == (r < x ? dag.edge_id(r, x) : dag.edge_id(x, r)));
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    CHECK(dag.find_edge(0, 0) == g.num_edges());
  }
}
