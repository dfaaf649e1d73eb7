#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "motifcount/count.hpp"
#include "motifcount/graph.hpp"

namespace testing {

using motifcount::Count;
using motifcount::Graph;
using motifcount::Vertex;
using EdgeVec = std::vector<std::pair<Vertex, Vertex>>;

inline Graph make_graph(std::size_t n, const EdgeVec& edges) { return Graph::from_edges(n, edges); }

inline Graph complete(std::size_t n) {
  EdgeVec e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return make_graph(n, e);
}

inline Graph cycle(std::size_t n) {
  EdgeVec e;
  for (Vertex a = 0; a < n; ++a) e.emplace_back(a, static_cast<Vertex>((a + 1) % n));
  return make_graph(n, e);
}

inline Graph star(std::size_t leaves) {
  EdgeVec e;
  for (Vertex a = 1; a <= leaves; ++a) e.emplace_back(0, a);
  return make_graph(leaves + 1, e);
}

inline Graph petersen() {
  EdgeVec e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return make_graph(10, e);
}

inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeVec e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) e.emplace_back(a, b);
  return make_graph(n, e);
}

// G(n, p) plus a planted clique and a planted star on random vertices.
inline Graph planted(std::size_t n, double p, std::size_t clique, std::size_t star_leaves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeVec e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) e.emplace_back(a, b);
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < clique; ++i)
    for (std::size_t j = i + 1; j < clique; ++j) e.emplace_back(perm[i], perm[j]);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 1; i <= star_leaves && i < n; ++i) e.emplace_back(perm[0], perm[i]);
  return make_graph(n, e);
}

// Same graph with vertex ids shuffled.
inline Graph relabel(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(g.num_vertices());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  EdgeVec e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return make_graph(g.num_vertices(), e);
}

struct RandomCase {
  Graph graph;
  std::size_t n;
  double p;
  std::uint64_t seed;
};

// The randomized suite: n in [6, 25], p in {0.1, 0.2, 0.3, 0.5}, with every
// fourth graph carrying a planted clique and star.
inline std::vector<RandomCase> random_suite(std::size_t count, std::uint64_t seed) {
  static constexpr double kDensity[] = {0.1, 0.2, 0.3, 0.5};
  std::mt19937_64 rng(seed);
  std::vector<RandomCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 6 + rng() % 20;
    const double p = kDensity[i % 4];
    const std::uint64_t s = rng();
    if (i % 4 == 3) {
      const std::size_t clique = 4 + s % std::min<std::size_t>(4, n - 4);
      out.push_back({planted(n, p / 2, clique, n / 2, s), n, p, s});
    } else {
      out.push_back({erdos_renyi(n, p, s), n, p, s});
    }
  }
  return out;
}

}  // namespace testing
