#ifndef LCYCLE_BENCH_HPP
#define LCYCLE_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcycle/graph.hpp"
#include "lcycle/io.hpp"
#include "lcycle/solvers.hpp"

namespace lcycle {

enum class Algorithm : std::uint8_t { anth_ls, msls_iii, msls_iv, exact };

std::optional<Algorithm> parse_algorithm(std::string_view name);
const char* to_string(Algorithm a);

struct ExperimentSpec {
  std::filesystem::path input;
  /// Deduced from the file extension when unset.
  std::optional<GraphFormat> format;
  /// Defaults to the input file stem.
  std::string instance_name;
  Algorithm algorithm = Algorithm::anth_ls;
  std::size_t runs = 10;
  std::uint64_t seed = 1;
  /// Solver parameters; `config.seed` is ignored in favour of seed + run.
  SolverConfig config;
  std::size_t restarts = 10000;
  std::size_t exact_budget = kDefaultExactBudget;
  bool prune = true;
  bool trace = false;

  /// Throws ConfigError.
  void validate() const;
};

struct RunRecord {
  std::uint64_t seed = 0;
  RunReport report;
};

struct AggregateReport {
  std::string instance;
  Algorithm algorithm = Algorithm::anth_ls;
  ExperimentSpec spec;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t pruned_vertices = 0;
  std::vector<RunRecord> runs;
  std::size_t best_length = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double mean_generations = 0.0;
  double mean_wall_time = 0.0;
};

/// Reads spec.input and runs the experiment on it.
AggregateReport run_experiment(const ExperimentSpec& spec);

/// Runs `spec.runs` independent solver runs on g with seeds spec.seed,
/// spec.seed + 1, ... and aggregates them. Every best cycle is re-validated
/// against g (InvalidCycleError otherwise).
AggregateReport run_experiment(const Graph& g, const ExperimentSpec& spec);

/// Structured JSON report {instance, algorithm, config, runs, aggregate}.
/// Cycles are written with the graph's vertex labels. Timing fields are
/// omitted when with_timing is false, which makes reports of identical specs
/// byte-identical.
std::string report_json(const AggregateReport& report, const Graph& g,
                        bool with_timing = true);

/// Undirected DOT rendering of g with the edges of c highlighted. Edges are
/// listed in sorted order. Throws InvalidCycleError if c is not a valid
/// cycle of g.
void export_cycle_dot(const Graph& g, const Cycle& c, std::ostream& out);

/// Fixed-column table, one row per report sorted by instance name:
/// graph, cycle length, successes/runs, mean generations, mean time.
std::string summarize(std::span<const AggregateReport> reports);

/// The same table as a JSON array.
std::string summarize_json(std::span<const AggregateReport> reports);

}  // namespace lcycle

#endif  // LCYCLE_BENCH_HPP
