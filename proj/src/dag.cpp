#include "motifcount/dag.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace motifcount {

DegreeOrientedDag::DegreeOrientedDag(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (g.num_edges() >= std::numeric_limits<EdgeId>::max()) throw std::length_error("edge count exceeds 32-bit ids");

  vertex_at_.resize(n);
  std::iota(vertex_at_.begin(), vertex_at_.end(), Vertex{0});
  std::stable_sort(vertex_at_.begin(), vertex_at_.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  rank_of_.resize(n);
  for (std::size_t r = 0; r < n; ++r) rank_of_[vertex_at_[r]] = static_cast<Vertex>(r);

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.num_edges());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(rank_of_[u], rank_of_[v]);
    }
  }
  ranked_ = Graph::from_edges(n, edges);
  edges.clear();
  edges.shrink_to_fit();

  split_.resize(n);
  out_base_.resize(n + 1);
  out_base_[0] = 0;
  for (Vertex r = 0; r < n; ++r) {
    auto row = ranked_.neighbors(r);
    split_[r] = static_cast<std::uint32_t>(std::upper_bound(row.begin(), row.end(), r) - row.begin());
    out_base_[r + 1] = out_base_[r] + static_cast<EdgeId>(row.size() - split_[r]);
  }

  const std::size_t m = ranked_.num_edges();
  slot_edge_.resize(2 * m);
  edge_tail_.resize(m);
  edge_head_.resize(m);
  // In-lists are sorted by tail rank, and tails are visited in increasing
  // order, so a per-head cursor fills the in-slots in place.
  std::vector<std::uint32_t> in_cursor(n, 0);
  for (Vertex a = 0; a < n; ++a) {
    auto row = ranked_.neighbors(a);
    for (std::size_t i = split_[a]; i < row.size(); ++i) {
      const Vertex b = row[i];
      const EdgeId e = out_base_[a] + static_cast<EdgeId>(i - split_[a]);
      slot_edge_[ranked_.slot_begin(a) + i] = e;
      slot_edge_[ranked_.slot_begin(b) + in_cursor[b]++] = e;
      edge_tail_[e] = a;
      edge_head_[e] = b;
    }
  }
}

EdgeId DegreeOrientedDag::find_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto row = out(a);
  auto it = std::lower_bound(row.begin(), row.end(), b);
  if (it == row.end() || *it != b) return static_cast<EdgeId>(num_edges());
  return out_base_[a] + static_cast<EdgeId>(it - row.begin());
}

EdgeId DegreeOrientedDag::edge_id(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto row = out(a);
  return out_base_[a] + static_cast<EdgeId>(std::lower_bound(row.begin(), row.end(), b) - row.begin());
}

std::vector<std::pair<Vertex, Vertex>> DegreeOrientedDag::directed_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) out.emplace_back(vertex_at_[edge_tail_[e]], vertex_at_[edge_head_[e]]);
  return out;
}

std::vector<Vertex> DegreeOrientedDag::out_neighbors_of(Vertex v) const {
  std::vector<Vertex> result;
  for (Vertex r : out(rank_of_[v])) result.push_back(vertex_at_[r]);
  return result;
}

std::size_t DegreeOrientedDag::memory_bytes() const {
  return ranked_.memory_bytes() +
         (rank_of_.capacity() + vertex_at_.capacity() + edge_tail_.capacity() + edge_head_.capacity()) * sizeof(Vertex) +
         split_.capacity() * sizeof(std::uint32_t) + (out_base_.capacity() + slot_edge_.capacity()) * sizeof(EdgeId);
}

}  // namespace motifcount
