#include "motifcount/report.hpp"

#include <chrono>
#include <sstream>

#include "motifcount/dag.hpp"
#include "motifcount/five.hpp"
#include "motifcount/four.hpp"
#include "motifcount/pattern_catalog.hpp"
#include "motifcount/triad.hpp"

namespace motifcount {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    out_.push_back({stage, std::chrono::duration<double>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

CountReport run_pipeline(const Graph& g, const PipelineOptions& opts) {
  if (opts.size < 3 || opts.size > 5) throw std::invalid_argument("pattern size must be 3, 4 or 5");
  CountReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.size = opts.size;
  r.profile_kind = opts.profiles;
  StageClock clock(r.timings);

  const DegreeOrientedDag dag(g);
  clock.lap("dag");

  const bool five = opts.size == 5 && g.num_vertices() >= 5;
  const TriangleStore tri = enumerate_triangles(dag, five ? opts.memory_budget : 0);
  const WedgeStats wedges = count_wedges(dag);
  clock.lap("triangles");
  if (five && !tri.has_lists()) {
    const auto need = TriangleStore::list_bytes(tri.total(), dag.num_edges());
    throw BudgetError("triangle lists need " + std::to_string(need) + " bytes, memory budget is " +
                          std::to_string(opts.memory_budget),
                      need);
  }

  ConnectedCounts connected;
  connected[1] = {Count(r.n)};
  connected[2] = {Count(r.m)};
  {
    SizeCounts& s = r.counts[3];
    s.noninduced = {wedges.W, Count(tri.total())};
    s.induced = noninduced_to_induced(3, s.noninduced);
    connected[3] = s.induced;
  }

  FourAux aux;
  if (opts.size >= 4 || opts.profiles != ProfileKind::none) {
    aux = count_four(dag, tri);
    clock.lap("four");
  }
  if (opts.size >= 4) {
    const FourCounts four = four_report(aux);
    SizeCounts& s = r.counts[4];
    s.noninduced.assign(four.noninduced.begin(), four.noninduced.end());
    s.induced.assign(four.induced.begin(), four.induced.end());
    connected[4] = s.induced;
  }
  if (opts.size == 5) {
    const FiveCounts fc = five_report(dag, tri, aux, opts.threads);
    SizeCounts& s = r.counts[5];
    s.noninduced.assign(fc.noninduced.begin(), fc.noninduced.end());
    s.induced.assign(fc.induced.begin(), fc.induced.end());
    connected[5] = s.induced;
    clock.lap("five");
  }

  for (auto& [k, s] : r.counts) s.disconnected = disconnected_counts(connected, k);
  clock.lap("disconnected");

  if (opts.profiles == ProfileKind::vertex) {
    r.vertex_profiles.reserve(r.n);
    for (Vertex v = 0; v < r.n; ++v) {
      const Vertex x = dag.rank_of(v);
      r.vertex_profiles.push_back({v, g.label(v), g.degree(v), tri.vertex_count(x), aux.cycles.per_vertex[x],
                                   aux.cliques.per_vertex[x]});
    }
  } else if (opts.profiles == ProfileKind::edge) {
    r.edge_profiles.reserve(r.m);
    for (auto [u, v] : g.edges()) {
      const Vertex a = dag.rank_of(u), b = dag.rank_of(v);
      const EdgeId e = a < b ? dag.edge_id(a, b) : dag.edge_id(b, a);
      r.edge_profiles.push_back({u, v, g.label(u), g.label(v), tri.edge_count(e), aux.cycles.per_edge[e],
                                 aux.cliques.per_edge[e]});
    }
  }
  if (opts.profiles != ProfileKind::none) clock.lap("profiles");

  if (opts.trends) r.trends = compute_trends(r.counts);
  return r;
}

std::uint64_t pipeline_memory_estimate(std::uint64_t n, std::uint64_t m, std::uint64_t triangles, int size,
                                       unsigned threads) {
  const std::uint64_t graph = 8 * (n + 1) + 8 * m;             // offsets + both adjacency directions
  const std::uint64_t dag = graph + 16 * n + 24 * m;            // ranked copy, rank maps, slot and endpoint ids
  std::uint64_t triad = 8 * n + 8 * m;                          // T(i), T(e), lowest-edge tally
  if (size == 5) triad += TriangleStore::list_bytes(triangles, m) + 8 * m;  // lists and fill cursors
  const std::uint64_t four = size >= 4 ? 16 * n + 16 * m + 4 * n : 0;  // 4-cycle and 4-clique tallies
  const std::uint64_t scratch = size == 5 ? std::uint64_t{24} * n * std::max(1u, threads) : 0;
  return graph + dag + triad + four + scratch;
}

namespace {

const char* profile_name(ProfileKind k) {
  switch (k) {
    case ProfileKind::vertex: return "vertex";
    case ProfileKind::edge: return "edge";
    default: return "none";
  }
}

ProfileKind profile_from(const std::string& s) {
  if (s == "vertex") return ProfileKind::vertex;
  if (s == "edge") return ProfileKind::edge;
  if (s == "none") return ProfileKind::none;
  throw std::invalid_argument("unknown profile kind: " + s);
}

ordered_json opt_json(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }
ordered_json opt_json(const std::optional<std::int64_t>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

template <class T>
std::optional<T> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

std::uint64_t u64_from(const json& j) {
  const Count c = parse_count(j.get<std::string>());
  if (c < 0 || c > Count(UINT64_MAX)) throw std::invalid_argument("profile count out of range");
  return static_cast<std::uint64_t>(c);
}

ordered_json trends_json(const Trends& t) {
  ordered_json j;
  ordered_json likelihood = ordered_json::object();
  for (const auto& [id, v] : t.edge_likelihood) likelihood[id] = opt_json(v);
  j["edge_likelihood"] = likelihood;
  j["four_cycle_closure"] = opt_json(t.four_cycle_closure);
  j["k23_closure"] = opt_json(t.k23_closure);
  j["wheel_in_near_clique"] = opt_json(t.wheel_in_near_clique);
  j["ear_in_near_clique"] = opt_json(t.ear_in_near_clique);
  j["near_clique_ratio"] = opt_json(t.near_clique_ratio);
  j["ear_to_wheel"] = opt_json(t.ear_to_wheel);
  return j;
}

Trends trends_from(const json& j) {
  Trends t;
  for (const auto& [id, v] : j.at("edge_likelihood").items()) t.edge_likelihood[id] = opt_from<double>(v);
  t.four_cycle_closure = opt_from<double>(j.at("four_cycle_closure"));
  t.k23_closure = opt_from<double>(j.at("k23_closure"));
  t.wheel_in_near_clique = opt_from<double>(j.at("wheel_in_near_clique"));
  t.ear_in_near_clique = opt_from<double>(j.at("ear_in_near_clique"));
  t.near_clique_ratio = opt_from<double>(j.at("near_clique_ratio"));
  t.ear_to_wheel = opt_from<double>(j.at("ear_to_wheel"));
  return t;
}

}  // namespace

ordered_json to_json(const CountReport& r, bool with_timings) {
  const auto& catalog = PatternCatalog::instance();
  ordered_json j;
  j["input"] = {{"name", r.input},
                {"n", r.n},
                {"m", r.m},
                {"dropped_self_loops", r.dropped_self_loops},
                {"dropped_duplicates", r.dropped_duplicates}};
  j["size"] = r.size;

  ordered_json counts = ordered_json::object();
  for (const auto& [k, s] : r.counts) {
    ordered_json conn = ordered_json::array();
    for (std::size_t i = 0; i < s.induced.size(); ++i) {
      const Pattern& p = catalog.connected(k)[i];
      conn.push_back({{"id", p.id},
                      {"name", p.name},
                      {"noninduced", to_string(s.noninduced[i])},
                      {"induced", to_string(s.induced[i])}});
    }
    ordered_json disc = ordered_json::array();
    for (std::size_t i = 0; i < s.disconnected.size(); ++i) {
      const Pattern& p = catalog.disconnected(k)[i];
      disc.push_back({{"id", p.id}, {"name", p.name}, {"induced", to_string(s.disconnected[i])}});
    }
    counts[std::to_string(k)] = {{"connected", conn}, {"disconnected", disc}};
  }
  j["counts"] = counts;

  if (r.profile_kind != ProfileKind::none) {
    ordered_json rows = ordered_json::array();
    for (const auto& p : r.vertex_profiles) {
      rows.push_back({{"vertex", p.vertex},
                      {"label", opt_json(p.label)},
                      {"degree", std::to_string(p.degree)},
                      {"triangles", std::to_string(p.triangles)},
                      {"four_cycles", std::to_string(p.four_cycles)},
                      {"four_cliques", std::to_string(p.four_cliques)}});
    }
    for (const auto& p : r.edge_profiles) {
      rows.push_back({{"u", p.u},
                      {"v", p.v},
                      {"u_label", opt_json(p.u_label)},
                      {"v_label", opt_json(p.v_label)},
                      {"triangles", std::to_string(p.triangles)},
                      {"four_cycles", std::to_string(p.four_cycles)},
                      {"four_cliques", std::to_string(p.four_cliques)}});
    }
    j["profiles"] = {{"kind", profile_name(r.profile_kind)}, {"rows", rows}};
  }
  if (r.trends) j["trends"] = trends_json(*r.trends);
  if (with_timings) {
    ordered_json t = ordered_json::array();
    for (const auto& s : r.timings) t.push_back({{"stage", s.stage}, {"seconds", s.seconds}});
    j["timings"] = t;
  }
  return j;
}

CountReport report_from_json(const json& j) {
  const auto& catalog = PatternCatalog::instance();
  CountReport r;
  const json& in = j.at("input");
  r.input = in.at("name").get<std::string>();
  r.n = in.at("n").get<std::uint64_t>();
  r.m = in.at("m").get<std::uint64_t>();
  r.dropped_self_loops = in.at("dropped_self_loops").get<std::uint64_t>();
  r.dropped_duplicates = in.at("dropped_duplicates").get<std::uint64_t>();
  r.size = j.at("size").get<int>();

  for (const auto& [key, block] : j.at("counts").items()) {
    const int k = std::stoi(key);
    SizeCounts s;
    const auto conn = catalog.connected(k);
    const auto& rows = block.at("connected");
    if (rows.size() != conn.size()) throw std::invalid_argument("size " + key + " has the wrong number of patterns");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].at("id").get<std::string>() != conn[i].id)
        throw std::invalid_argument("unexpected pattern id " + rows[i].at("id").get<std::string>());
      s.noninduced.push_back(parse_count(rows[i].at("noninduced").get<std::string>()));
      s.induced.push_back(parse_count(rows[i].at("induced").get<std::string>()));
    }
    const auto disc = catalog.disconnected(k);
    const auto& drows = block.at("disconnected");
    if (drows.size() != disc.size()) throw std::invalid_argument("size " + key + " has the wrong number of patterns");
    for (std::size_t i = 0; i < drows.size(); ++i) {
      if (drows[i].at("id").get<std::string>() != disc[i].id)
        throw std::invalid_argument("unexpected pattern id " + drows[i].at("id").get<std::string>());
      s.disconnected.push_back(parse_count(drows[i].at("induced").get<std::string>()));
    }
    r.counts[k] = std::move(s);
  }

  if (j.contains("profiles")) {
    const json& p = j.at("profiles");
    r.profile_kind = profile_from(p.at("kind").get<std::string>());
    for (const auto& row : p.at("rows")) {
      if (r.profile_kind == ProfileKind::vertex) {
        r.vertex_profiles.push_back({row.at("vertex").get<Vertex>(), opt_from<std::int64_t>(row.at("label")),
                                     u64_from(row.at("degree")), u64_from(row.at("triangles")),
                                     u64_from(row.at("four_cycles")), u64_from(row.at("four_cliques"))});
      } else {
        r.edge_profiles.push_back({row.at("u").get<Vertex>(), row.at("v").get<Vertex>(),
                                   opt_from<std::int64_t>(row.at("u_label")), opt_from<std::int64_t>(row.at("v_label")),
                                   u64_from(row.at("triangles")), u64_from(row.at("four_cycles")),
                                   u64_from(row.at("four_cliques"))});
      }
    }
  }
  if (j.contains("trends")) r.trends = trends_from(j.at("trends"));
  if (j.contains("timings"))
    for (const auto& t : j.at("timings")) r.timings.push_back({t.at("stage").get<std::string>(), t.at("seconds").get<double>()});
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string double_text(const std::optional<double>& v) { return v ? json(*v).dump() : ""; }
std::string label_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::string to_csv(const CountReport& r, bool with_timings) {
  const auto& catalog = PatternCatalog::instance();
  std::ostringstream out;
  auto row = [&](const std::string& section, const std::string& key, const std::string& field,
                 const std::string& value) {
    out << section << ',' << csv_field(key) << ',' << field << ',' << csv_field(value) << '\n';
  };
  out << "section,key,field,value\n";
  row("input", "", "name", r.input);
  row("input", "", "n", std::to_string(r.n));
  row("input", "", "m", std::to_string(r.m));
  row("input", "", "dropped_self_loops", std::to_string(r.dropped_self_loops));
  row("input", "", "dropped_duplicates", std::to_string(r.dropped_duplicates));
  row("input", "", "size", std::to_string(r.size));

  for (const auto& [k, s] : r.counts) {
    for (std::size_t i = 0; i < s.induced.size(); ++i) {
      const Pattern& p = catalog.connected(k)[i];
      row("count", p.id, "name", p.name);
      row("count", p.id, "noninduced", to_string(s.noninduced[i]));
      row("count", p.id, "induced", to_string(s.induced[i]));
    }
    for (std::size_t i = 0; i < s.disconnected.size(); ++i) {
      const Pattern& p = catalog.disconnected(k)[i];
      row("count", p.id, "name", p.name);
      row("count", p.id, "induced", to_string(s.disconnected[i]));
    }
  }

  for (const auto& p : r.vertex_profiles) {
    const std::string key = std::to_string(p.vertex);
    row("vertex", key, "label", label_text(p.label));
    row("vertex", key, "degree", std::to_string(p.degree));
    row("vertex", key, "triangles", std::to_string(p.triangles));
    row("vertex", key, "four_cycles", std::to_string(p.four_cycles));
    row("vertex", key, "four_cliques", std::to_string(p.four_cliques));
  }
  for (const auto& p : r.edge_profiles) {
    const std::string key = std::to_string(p.u) + "-" + std::to_string(p.v);
    row("edge", key, "u_label", label_text(p.u_label));
    row("edge", key, "v_label", label_text(p.v_label));
    row("edge", key, "triangles", std::to_string(p.triangles));
    row("edge", key, "four_cycles", std::to_string(p.four_cycles));
    row("edge", key, "four_cliques", std::to_string(p.four_cliques));
  }

  if (r.trends) {
    for (const auto& [id, v] : r.trends->edge_likelihood) row("trend", id, "edge_likelihood", double_text(v));
    row("trend", "", "four_cycle_closure", double_text(r.trends->four_cycle_closure));
    row("trend", "", "k23_closure", double_text(r.trends->k23_closure));
    row("trend", "", "wheel_in_near_clique", double_text(r.trends->wheel_in_near_clique));
    row("trend", "", "ear_in_near_clique", double_text(r.trends->ear_in_near_clique));
    row("trend", "", "near_clique_ratio", double_text(r.trends->near_clique_ratio));
    row("trend", "", "ear_to_wheel", double_text(r.trends->ear_to_wheel));
  }
  if (with_timings)
    for (const auto& t : r.timings) row("timing", t.stage, "seconds", json(t.seconds).dump());
  return out.str();
}

ordered_json atlas_json() {
  const auto& catalog = PatternCatalog::instance();
  ordered_json j;
  ordered_json patterns = ordered_json::array();
  for (int k = 1; k <= kMaxPatternSize; ++k) {
    for (const Pattern& p : catalog.patterns(k)) {
      ordered_json edges = ordered_json::array();
      for (auto [a, b] : p.edges) edges.push_back({a, b});
      ordered_json entry = {{"id", p.id},
                            {"name", p.name},
                            {"size", p.size},
                            {"index", p.index},
                            {"connected", p.connected},
                            {"edges", edges},
                            {"automorphisms", p.automorphisms}};
      if (!p.connected) {
        const auto disc = catalog.disconnected(k);
        const auto d = static_cast<int>(&p - disc.data());
        entry["injective_matches"] = catalog.polynomial_string(catalog.disconnected_polynomial(k, d));
      }
      patterns.push_back(entry);
    }
  }
  j["patterns"] = patterns;

  auto matrix = [](const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
      rows.push_back(row);
    }
    return rows;
  };
  ordered_json conv = ordered_json::object();
  for (int k = 3; k <= kMaxPatternSize; ++k)
    conv[std::to_string(k)] = {{"noninduced_from_induced", matrix(catalog.conversion(k).forward)},
                               {"induced_from_noninduced", matrix(catalog.conversion(k).inverse)}};
  j["conversion"] = conv;
  return j;
}

}  // namespace motifcount
