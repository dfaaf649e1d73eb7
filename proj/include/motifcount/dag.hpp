#pragma once

#include <span>
#include <utility>
#include <vector>

#include "motifcount/graph.hpp"

namespace motifcount {

// Acyclic orientation of a Graph under the (degree, id) order: u precedes v
// when d(u) < d(v), or the degrees tie and u < v. Each edge points from the
// earlier to the later endpoint.
//
// All enumeration runs in rank space: vertices are relabelled by their
// position in the order, so "precedes" becomes "<" and the out-neighbours
// of r are the suffix of its (sorted) neighbour list above r. Undirected
// edges carry dense ids 0..m-1, numbered by (tail rank, head rank).
class DegreeOrientedDag {
 public:
  explicit DegreeOrientedDag(const Graph& g);

  std::size_t num_vertices() const { return ranked_.num_vertices(); }
  std::size_t num_edges() const { return ranked_.num_edges(); }

  // Rank <-> original vertex id.
  Vertex rank_of(Vertex v) const { return rank_of_[v]; }
  Vertex vertex_at(Vertex r) const { return vertex_at_[r]; }
  const std::vector<Vertex>& order() const { return vertex_at_; }

  // Rank-space views.
  const Graph& ranked() const { return ranked_; }
  std::size_t degree(Vertex r) const { return ranked_.degree(r); }
  std::span<const Vertex> neighbors(Vertex r) const { return ranked_.neighbors(r); }
  std::span<const Vertex> out(Vertex r) const { return neighbors(r).subspan(split_[r]); }
  std::span<const Vertex> in(Vertex r) const { return neighbors(r).first(split_[r]); }
  std::size_t out_degree(Vertex r) const { return degree(r) - split_[r]; }
  std::size_t in_degree(Vertex r) const { return split_[r]; }

  // Edge id for the adjacency slot `i` of rank r (i indexes neighbors(r)).
  EdgeId edge_at(Vertex r, std::size_t i) const { return slot_edge_[ranked_.slot_begin(r) + i]; }
  // Edge id of out(r)[i].
  EdgeId out_edge(Vertex r, std::size_t i) const { return out_base_[r] + static_cast<EdgeId>(i); }
  // Edge id of the rank pair (a, b); the pair must be an edge.
  EdgeId edge_id(Vertex a, Vertex b) const;
  // Returns m when the pair is not an edge.
  EdgeId find_edge(Vertex a, Vertex b) const;
  std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return {edge_tail_[e], edge_head_[e]}; }

  // Directed edges in original ids, tail to head.
  std::vector<std::pair<Vertex, Vertex>> directed_edges() const;
  // Out-neighbours of an original vertex, as original ids ordered by rank.
  std::vector<Vertex> out_neighbors_of(Vertex v) const;

  std::size_t memory_bytes() const;

 private:
  Graph ranked_;
  std::vector<Vertex> rank_of_;
  std::vector<Vertex> vertex_at_;
  std::vector<std::uint32_t> split_;
  std::vector<EdgeId> out_base_;
  std::vector<EdgeId> slot_edge_;
  std::vector<Vertex> edge_tail_;
  std::vector<Vertex> edge_head_;
};

}  // namespace motifcount
