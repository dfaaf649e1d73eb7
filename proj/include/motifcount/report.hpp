#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "motifcount/count.hpp"
#include "motifcount/graph.hpp"
#include "motifcount/trends.hpp"

namespace motifcount {

// Counts for one pattern size, in catalog order.
struct SizeCounts {
  std::vector<Count> noninduced;    // connected patterns
  std::vector<Count> induced;       // connected patterns
  std::vector<Count> disconnected;  // induced counts of disconnected patterns
};

enum class ProfileKind { none, vertex, edge };

struct VertexProfile {
  Vertex vertex = 0;
  std::optional<std::int64_t> label;
  std::uint64_t degree = 0;
  std::uint64_t triangles = 0;
  std::uint64_t four_cycles = 0;
  std::uint64_t four_cliques = 0;
  friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

struct EdgeProfile {
  Vertex u = 0, v = 0;
  std::optional<std::int64_t> u_label, v_label;
  std::uint64_t triangles = 0;
  std::uint64_t four_cycles = 0;
  std::uint64_t four_cliques = 0;
  friend bool operator==(const EdgeProfile&, const EdgeProfile&) = default;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct CountReport {
  std::string input;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t dropped_self_loops = 0;
  std::uint64_t dropped_duplicates = 0;
  int size = 5;
  std::map<int, SizeCounts> counts;  // keyed by pattern size, 3..size
  ProfileKind profile_kind = ProfileKind::none;
  std::vector<VertexProfile> vertex_profiles;
  std::vector<EdgeProfile> edge_profiles;
  std::optional<Trends> trends;
  std::vector<StageTiming> timings;
};

struct PipelineOptions {
  int size = 5;
  ProfileKind profiles = ProfileKind::none;
  // Cap on triangle-list memory; 5-vertex counting is refused beyond it.
  std::uint64_t memory_budget = std::uint64_t{4} << 30;
  unsigned threads = 1;
  bool trends = false;
};

// graph -> DAG -> triangles -> 4-vertex stage -> 5-vertex stage ->
// disconnected patterns. Throws IntegrityError or BudgetError.
CountReport run_pipeline(const Graph& g, const PipelineOptions& opts);

// Bytes held by the main structures of a run on n vertices, m edges and
// `triangles` triangles: CSR graph, oriented copy with edge ids, triangle
// store (with lists for size 5), 4-vertex tallies, and per-worker scratch.
std::uint64_t pipeline_memory_estimate(std::uint64_t n, std::uint64_t m, std::uint64_t triangles, int size,
                                       unsigned threads = 1);

// Timings are left out unless asked for, so reports stay byte-identical
// across runs.
nlohmann::ordered_json to_json(const CountReport& r, bool with_timings = false);
CountReport report_from_json(const nlohmann::json& j);

// Long format: section,key,field,value.
std::string to_csv(const CountReport& r, bool with_timings = false);

// Catalog of all patterns with edges, automorphisms and disconnected
// polynomials.
nlohmann::ordered_json atlas_json();

}  // namespace motifcount
