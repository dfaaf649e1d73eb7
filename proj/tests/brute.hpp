#pragma once

#include <array>
#include <map>
#include <vector>

#include "motifcount/graph.hpp"

namespace testing {

using motifcount::Graph;
using motifcount::Vertex;

// Per-vertex, per-edge and per-triangle tallies found by looking at every
// vertex subset. Keys use original vertex ids with u < v < w.
struct BruteObjects {
  std::uint64_t triangles = 0, four_cycles = 0, four_cliques = 0;
  std::vector<std::uint64_t> tri_v, c4_v, k4_v;
  std::map<std::pair<Vertex, Vertex>, std::uint64_t> tri_e, c4_e, k4_e;
  std::map<std::array<Vertex, 3>, std::uint64_t> k4_t;
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> completions;
};

inline BruteObjects brute_objects(const Graph& g) {
  const Vertex n = static_cast<Vertex>(g.num_vertices());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  auto key = [](Vertex a, Vertex b) { return std::pair<Vertex, Vertex>{std::min(a, b), std::max(a, b)}; };

  BruteObjects b;
  b.tri_v.assign(n, 0);
  b.c4_v.assign(n, 0);
  b.k4_v.assign(n, 0);
  for (auto e : g.edges()) {
    b.tri_e[e] = b.c4_e[e] = b.k4_e[e] = 0;
    b.completions[e] = {};
  }

  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z) {
        if (!(adj[x][y] && adj[x][z] && adj[y][z])) continue;
        ++b.triangles;
        for (Vertex v : {x, y, z}) ++b.tri_v[v];
        ++b.tri_e[{x, y}];
        ++b.tri_e[{x, z}];
        ++b.tri_e[{y, z}];
        b.completions[{x, y}].push_back(z);
        b.completions[{x, z}].push_back(y);
        b.completions[{y, z}].push_back(x);
        b.k4_t[{x, y, z}] = 0;
      }
  for (auto& [e, list] : b.completions) std::sort(list.begin(), list.end());

  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = a + 1; c < n; ++c)
      for (Vertex d = c + 1; d < n; ++d)
        for (Vertex e = d + 1; e < n; ++e) {
          const std::array<Vertex, 4> s{a, c, d, e};
          // The three ways to arrange four vertices in a cycle.
          const std::array<std::array<int, 4>, 3> orders{{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}}};
          for (const auto& o : orders) {
            bool ok = true;
            for (int i = 0; i < 4; ++i) ok = ok && adj[s[o[i]]][s[o[(i + 1) % 4]]];
            if (!ok) continue;
            ++b.four_cycles;
            for (Vertex v : s) ++b.c4_v[v];
            for (int i = 0; i < 4; ++i) ++b.c4_e[key(s[o[i]], s[o[(i + 1) % 4]])];
          }
          bool clique = true;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) clique = clique && adj[s[i]][s[j]];
          if (!clique) continue;
          ++b.four_cliques;
          for (Vertex v : s) ++b.k4_v[v];
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) ++b.k4_e[{s[i], s[j]}];
          for (int skip = 0; skip < 4; ++skip) {
            std::array<Vertex, 3> t{};
            int w = 0;
            for (int i = 0; i < 4; ++i)
              if (i != skip) t[static_cast<std::size_t>(w++)] = s[i];
            ++b.k4_t[t];
          }
        }
  return b;
}

}  // namespace testing
