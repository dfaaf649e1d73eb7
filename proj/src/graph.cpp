#include "motifcount/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <string_view>
#include <unordered_map>

namespace motifcount {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n > std::numeric_limits<Vertex>::max()) throw std::length_error("vertex count exceeds 32-bit ids");
  std::vector<std::uint64_t> degree(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint outside vertex range");
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  std::vector<Vertex> adjacency(g.offsets_[n]);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adjacency[cursor[u]++] = v;
    adjacency[cursor[v]++] = u;
  }
  // Sort and deduplicate each row, then compact.
  std::uint64_t write = 0;
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    offsets[v] = write;
    for (auto it = first; it != unique_end; ++it) adjacency[write++] = *it;
  }
  offsets[n] = write;
  adjacency.resize(write);
  adjacency.shrink_to_fit();
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits on spaces/tabs/commas and parses exactly two integers.
std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view line, std::size_t line_no) {
  std::int64_t values[2];
  int count = 0;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != ',') ++end;
    std::string_view token = line.substr(pos, end - pos);
    if (count == 2) throw ParseError(line_no, "expected two integer tokens, found more");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "non-integer token '" + std::string(token) + "'");
    }
    values[count++] = value;
    pos = end;
  }
  if (count != 2) throw ParseError(line_no, "expected two integer tokens, found " + std::to_string(count));
  return {values[0], values[1]};
}

}  // namespace

LoadResult load_edge_list(std::istream& in, const LoadOptions& options) {
  std::unordered_map<std::int64_t, Vertex> index;
  std::vector<std::int64_t> labels;
  std::vector<std::pair<Vertex, Vertex>> raw;
  std::optional<std::size_t> header_n;
  bool header_pending = options.header;

  auto intern = [&](std::int64_t label, std::size_t line_no) -> Vertex {
    auto [it, inserted] = index.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) {
      if (labels.size() >= std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "too many vertices");
      labels.push_back(label);
    }
    return it->second;
  };

  LoadResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#' || view.front() == '%') continue;
    auto [a, b] = parse_pair(view, line_no);
    if (header_pending) {
      header_pending = false;
      if (a < 0 || b < 0) throw ParseError(line_no, "negative value in header");
      header_n = static_cast<std::size_t>(a);
      continue;
    }
    Vertex u = intern(a, line_no);
    Vertex v = intern(b, line_no);
    if (u == v) {
      ++result.dropped_self_loops;
      continue;
    }
    raw.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (in.bad()) throw ParseError(0, "read error");

  std::size_t n = labels.size();
  for (auto requested : {header_n, options.num_vertices}) {
    if (!requested) continue;
    if (*requested < labels.size()) {
      throw ParseError(0, "vertex count " + std::to_string(*requested) + " is below the " +
                              std::to_string(labels.size()) + " distinct ids in the input");
    }
    n = std::max(n, *requested);
  }

  std::sort(raw.begin(), raw.end());
  const std::size_t before = raw.size();
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  result.dropped_duplicates = before - raw.size();

  result.graph = Graph::from_edges(n, raw);
  result.graph.set_labels(std::move(labels));
  return result;
}

LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return load_edge_list(in, options);
}

}  // namespace motifcount
