#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace motifcount {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Immutable undirected simple graph in CSR form. Neighbour lists are strictly
// increasing, symmetric, and free of self-loops.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Builds a simple graph on vertices 0..n-1. Self-loops and repeated pairs
  // (in either direction) are dropped.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  // Position of the first adjacency slot of v in the flat neighbour array.
  std::size_t slot_begin(Vertex v) const { return offsets_[v]; }

  // Logarithmic membership test (binary search on the shorter list).
  bool has_edge(Vertex u, Vertex v) const;

  // Every undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Input label of a vertex, when the vertex came from an edge list. Vertices
  // padded in by an explicit vertex count have no label.
  std::optional<std::int64_t> label(Vertex v) const {
    if (v < labels_.size()) return labels_[v];
    return std::nullopt;
  }
  void set_labels(std::vector<std::int64_t> labels) { labels_ = std::move(labels); }
  const std::vector<std::int64_t>& labels() const { return labels_; }

  std::size_t memory_bytes() const {
    return offsets_.capacity() * sizeof(std::uint64_t) + adjacency_.capacity() * sizeof(Vertex) +
           labels_.capacity() * sizeof(std::int64_t);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::int64_t> labels_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadOptions {
  // Fixes n above the number of distinct ids (isolated vertices).
  std::optional<std::size_t> num_vertices;
  // Treat the first non-comment line as an "n m" header.
  bool header = false;
};

struct LoadResult {
  Graph graph;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
};

// Reads a whitespace-separated edge list. Lines starting with '#' or '%' are
// comments. Input ids are compacted to 0..n-1 in order of first appearance;
// pair direction is ignored.
LoadResult load_edge_list(std::istream& in, const LoadOptions& options = {});
LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options = {});

}  // namespace motifcount
