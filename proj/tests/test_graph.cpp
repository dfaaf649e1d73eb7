#include <sstream>

#include "doctest.h"
#include "motifcount/graph.hpp"
#include "support.hpp"

using namespace motifcount;

namespace {
LoadResult load(const std::string& text, LoadOptions opts = {}) {
  std::istringstream in(text);
  return load_edge_list(in, opts);
}
}  // namespace

TEST_CASE("loader drops self-loops and duplicates") {
  const auto r = load("1 2\n2 1\n1 1\n2 3\n");
  CHECK(r.graph.num_vertices() == 3);
  CHECK(r.graph.num_edges() == 2);
  CHECK(r.dropped_self_loops == 1);
  CHECK(r.dropped_duplicates == 1);
  CHECK(r.graph.has_edge(0, 1));
  CHECK(r.graph.has_edge(1, 2));
  CHECK_FALSE(r.graph.has_edge(0, 2));
}

TEST_CASE("loader reads a triangle with comments and mixed separators") {
  const auto r = load("# comment\n% other comment\n0 1\n1,2\n\n 0\t2 \n");
  CHECK(r.graph.num_edges() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(r.graph.degree(v) == 2);
}

TEST_CASE("ids are compacted in first-appearance order and labels kept") {
  const auto r = load("100 -7\n-7 42\n");
  CHECK(r.graph.num_vertices() == 3);
  CHECK(r.graph.label(0) == 100);
  CHECK(r.graph.label(1) == -7);
  CHECK(r.graph.label(2) == 42);
  CHECK(r.graph.degree(1) == 2);
}

TEST_CASE("empty input is an empty graph") {
  const auto r = load("# nothing here\n");
  CHECK(r.graph.num_vertices() == 0);
  CHECK(r.graph.num_edges() == 0);
}

TEST_CASE("malformed lines report their line number") {
  try {
    load("0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(load("0\n"), ParseError);
  CHECK_THROWS_AS(load("0 1.5\n"), ParseError);
}

TEST_CASE("explicit vertex count pads isolated vertices") {
  LoadOptions opts;
  opts.num_vertices = 6;
  const auto r = load("0 1\n", opts);
  CHECK(r.graph.num_vertices() == 6);
  CHECK_FALSE(r.graph.label(4).has_value());

  opts.num_vertices = 1;
  CHECK_THROWS_AS(load("0 1\n", opts), ParseError);
}

TEST_CASE("header line fixes n only when requested") {
  LoadOptions opts;
  opts.header = true;
  const auto r = load("# header next\n10 1\n3 4\n", opts);
  CHECK(r.graph.num_vertices() == 10);
  CHECK(r.graph.num_edges() == 1);
  // Without the flag the same line is an edge.
  CHECK(load("10 1\n3 4\n").graph.num_edges() == 2);
}

TEST_CASE("loading is deterministic") {
  const std::string text = "5 3\n3 9\n9 5\n5 1\n";
  CHECK(load(text).graph == load(text).graph);
}

TEST_CASE("adjacency invariants on random graphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = testing::erdos_renyi(30, 0.2, seed);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const auto nb = g.neighbors(v);
      degree_sum += nb.size();
      for (std::size_t i = 0; i < nb.size(); ++i) {
        CHECK(nb[i] != v);
        if (i > 0) CHECK(nb[i - 1] < nb[i]);
        CHECK(g.has_edge(nb[i], v));
      }
    }
    CHECK(degree_sum == 2 * g.num_edges());
  }
}
