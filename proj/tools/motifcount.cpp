// motifcount: exact counts of every 3-, 4- and 5-vertex pattern in a graph.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "motifcount/graph.hpp"
#include "motifcount/oracle.hpp"
#include "motifcount/pattern_catalog.hpp"
#include "motifcount/report.hpp"
#include "motifcount/simd/intersect.hpp"

using namespace motifcount;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kIntegrity = 3, kBudget = 4 };

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// Compares every engine count with a brute-force pass over all subsets.
bool oracle_check(const Graph& g, const CountReport& r, std::uint64_t budget) {
  bool ok = true;
  const auto& catalog = PatternCatalog::instance();
  for (const auto& [k, s] : r.counts) {
    const OracleResult o = brute_force_induced(g, k, budget);
    std::vector<Count> engine = s.induced;
    engine.insert(engine.end(), s.disconnected.begin(), s.disconnected.end());
    for (std::size_t i = 0; i < engine.size(); ++i) {
      if (engine[i] != o.induced[i]) {
        std::cerr << "oracle-check: " << catalog.patterns(k)[i].id << " engine " << to_string(engine[i])
                  << " brute force " << to_string(o.induced[i]) << "\n";
        ok = false;
      }
    }
    for (std::size_t i = 0; i < s.noninduced.size(); ++i) {
      if (s.noninduced[i] != o.noninduced[i]) {
        std::cerr << "oracle-check: " << catalog.patterns(k)[i].id << " non-induced engine "
                  << to_string(s.noninduced[i]) << " brute force " << to_string(o.noninduced[i]) << "\n";
        ok = false;
      }
    }
  }
  std::cerr << "oracle-check: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact induced and non-induced counts of all 3-, 4- and 5-vertex patterns"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count patterns in an edge list ('-' reads stdin)");
  std::string input;
  int size = 5;
  std::string format = "json";
  std::optional<std::size_t> num_vertices;
  bool header = false;
  std::string profiles = "none";
  bool check = false;
  std::uint64_t memory_budget = PipelineOptions{}.memory_budget;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  bool trends = false;
  unsigned threads = 1;
  bool timings = false;
  std::string output;
  std::string isa = "auto";
  count->add_option("input", input, "Edge list file")->required();
  count->add_option("--size", size, "Largest pattern size")->check(CLI::IsMember({3, 4, 5}));
  count->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  count->add_option("--num-vertices", num_vertices, "Vertex count, to include isolated vertices");
  count->add_flag("--header", header, "First non-comment line is an \"n m\" header");
  count->add_option("--profiles", profiles, "Per-vertex or per-edge 4-profiles")
      ->check(CLI::IsMember({"none", "vertex", "edge"}));
  count->add_flag("--oracle-check", check, "Verify every count by brute force (small graphs)");
  count->add_option("--oracle-budget", oracle_budget, "Maximum subsets the brute-force check may visit");
  count->add_option("--memory-budget", memory_budget, "Bytes allowed for triangle lists");
  count->add_flag("--trends", trends, "Add trend ratios to the report");
  count->add_option("--threads", threads, "Worker threads for the 5-vertex kernels (0 = all cores)");
  count->add_flag("--timings", timings, "Include per-stage wall-clock times");
  count->add_option("--isa", isa, "Intersection kernels")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  count->add_option("-o,--output", output, "Output file (default stdout)");

  auto* atlas = app.add_subcommand("atlas", "Print the pattern catalog as JSON");
  std::string atlas_output;
  atlas->add_option("-o,--output", atlas_output, "Output file (default stdout)");

  auto* trend_cmd = app.add_subcommand("trends", "Add trend ratios to a saved JSON report");
  std::string report_path;
  std::string trend_output;
  trend_cmd->add_option("report", report_path, "JSON report from 'count'")->required();
  trend_cmd->add_option("-o,--output", trend_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*atlas) {
      write_output(atlas_output, atlas_json().dump(2) + "\n");
      return kOk;
    }

    if (*trend_cmd) {
      nlohmann::json j;
      try {
        std::ifstream in(report_path);
        if (!in) throw ParseError(0, "cannot open " + report_path);
        j = nlohmann::json::parse(in);
        CountReport r = report_from_json(j);
        if (!r.counts.count(5)) throw ParseError(0, "trends need a report with 5-vertex counts");
        r.trends = compute_trends(r.counts);
        write_output(trend_output, to_json(r, j.contains("timings")).dump(2) + "\n");
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed report: ") + e.what());
      } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("malformed report: ") + e.what());
      }
      return kOk;
    }

    if (isa == "scalar") simd::force_isa(simd::Isa::scalar);
    if (isa == "avx2") simd::force_isa(simd::Isa::avx2);

    LoadOptions lo;
    lo.num_vertices = num_vertices;
    lo.header = header;
    const auto t0 = std::chrono::steady_clock::now();
    LoadResult loaded;
    if (input == "-") {
      loaded = load_edge_list(std::cin, lo);
    } else {
      loaded = load_edge_list_file(input, lo);
    }
    const double load_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    PipelineOptions opts;
    opts.size = size;
    opts.profiles = profiles == "vertex" ? ProfileKind::vertex
                    : profiles == "edge" ? ProfileKind::edge
                                         : ProfileKind::none;
    opts.memory_budget = memory_budget;
    opts.threads = threads;
    opts.trends = trends;
    CountReport r = run_pipeline(loaded.graph, opts);
    r.input = input;
    r.dropped_self_loops = loaded.dropped_self_loops;
    r.dropped_duplicates = loaded.dropped_duplicates;
    r.timings.insert(r.timings.begin(), {"load", load_seconds});

    if (check && !oracle_check(loaded.graph, r, oracle_budget)) return kIntegrity;

    write_output(output, format == "csv" ? to_csv(r, timings) : to_json(r, timings).dump(2) + "\n");
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kIntegrity;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << " (required " << e.required() << ")\n";
    return kBudget;
  } catch (const std::overflow_error& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kIntegrity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
