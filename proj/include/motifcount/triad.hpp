#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "motifcount/count.hpp"
#include "motifcount/dag.hpp"

namespace motifcount {

struct WedgeStats {
  Count W = 0;
  Count W_outout = 0;  // center has two out-edges
  Count W_inout = 0;   // one in-edge, one out-edge
  Count W_inin = 0;    // two in-edges
};

WedgeStats count_wedges(const DegreeOrientedDag& dag);

// Triangle counts and, optionally, per-edge completion lists. Everything is
// in the rank space of the DAG it was built from; edges use its dense ids.
//
// The completion list of edge (x, y), x < y, holds every z forming a
// triangle with it, sorted. Entries z > y form a contiguous suffix: those
// are the triangles whose lowest edge is (x, y), and their position in the
// suffix gives the triangle a dense id in [0, T).
class TriangleStore {
 public:
  std::uint64_t total() const { return total_; }
  std::uint64_t vertex_count(Vertex r) const { return vertex_[r]; }
  std::uint32_t edge_count(EdgeId e) const { return edge_[e]; }
  const std::vector<std::uint64_t>& vertex_counts() const { return vertex_; }
  const std::vector<std::uint32_t>& edge_counts() const { return edge_; }

  bool has_lists() const { return has_lists_; }
  std::span<const Vertex> list(EdgeId e) const {
    return {pool_.data() + offset_[e], pool_.data() + offset_[e + 1]};
  }
  // Completions z above the head of e, i.e. triangles with e as lowest edge.
  std::span<const Vertex> upper(EdgeId e) const {
    return {pool_.data() + offset_[e] + lower_[e], pool_.data() + offset_[e + 1]};
  }
  std::uint64_t first_triangle(EdgeId e) const { return triangle_base_[e]; }

  // Dense id of triangle x < y < z, given the id of edge (x, y).
  std::uint64_t triangle_id(EdgeId xy, Vertex z) const;

  // Bytes the lists (and per-triangle tallies built on them) occupy for a
  // graph with `triangles` triangles and `edges` edges.
  static std::uint64_t list_bytes(std::uint64_t triangles, std::uint64_t edges);
  std::size_t memory_bytes() const;

 private:
  friend TriangleStore enumerate_triangles(const DegreeOrientedDag&, std::uint64_t);

  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> vertex_;
  std::vector<std::uint32_t> edge_;
  bool has_lists_ = false;
  std::vector<std::uint64_t> offset_;
  std::vector<std::uint32_t> lower_;
  std::vector<std::uint64_t> triangle_base_;
  std::vector<Vertex> pool_;
};

// Finds every triangle once from its lowest vertex by intersecting out-lists.
// Lists are materialized when list_bytes() fits in `list_budget`.
TriangleStore enumerate_triangles(const DegreeOrientedDag& dag,
                                  std::uint64_t list_budget = std::numeric_limits<std::uint64_t>::max());

}  // namespace motifcount
