#include "lcycle/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lcycle/pheromone.hpp"

namespace lcycle {

using nlohmann::ordered_json;

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "anth-ls") return Algorithm::anth_ls;
  if (name == "msls-iii") return Algorithm::msls_iii;
  if (name == "msls-iv") return Algorithm::msls_iv;
  if (name == "exact") return Algorithm::exact;
  return std::nullopt;
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::anth_ls:
      return "anth-ls";
    case Algorithm::msls_iii:
      return "msls-iii";
    case Algorithm::msls_iv:
      return "msls-iv";
    case Algorithm::exact:
      return "exact";
  }
  return "unknown";
}

void ExperimentSpec::validate() const {
  if (runs == 0) throw ConfigError("runs must be >= 1");
  switch (algorithm) {
    case Algorithm::anth_ls:
      config.validate();
      break;
    case Algorithm::msls_iii:
    case Algorithm::msls_iv:
      if (restarts == 0) throw ConfigError("restarts must be >= 1");
      if (config.i_stag == 0) throw ConfigError("stag must be >= 1");
      break;
    case Algorithm::exact:
      break;
  }
}

namespace {

RunReport run_once(const Graph& g, const ExperimentSpec& spec,
                   std::uint64_t seed) {
  switch (spec.algorithm) {
    case Algorithm::anth_ls: {
      SolverConfig cfg = spec.config;
      cfg.seed = seed;
      cfg.prune = spec.prune;
      cfg.record_trace = spec.trace;
      return anth_ls(g, cfg);
    }
    case Algorithm::msls_iii:
    case Algorithm::msls_iv:
      return msls(g, spec.restarts,
                  spec.algorithm == Algorithm::msls_iii ? LsVariant::ls3
                                                        : LsVariant::ls4,
                  spec.config.i_stag, seed, spec.prune);
    case Algorithm::exact: {
      const auto start = std::chrono::steady_clock::now();
      RunReport r;
      if (spec.prune) {
        PruneResult pr = prune_leaves(g);
        r.best_cycle =
            to_original(pr, exact_longest_cycle(pr.pruned, spec.exact_budget));
      } else {
        r.best_cycle = exact_longest_cycle(g, spec.exact_budget);
      }
      r.best_length = r.best_cycle.length();
      r.generations_used = 1;
      r.terminated_by = Termination::convergence;
      r.wall_time = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      return r;
    }
  }
  throw ConfigError("unknown algorithm");
}

ordered_json config_json(const ExperimentSpec& spec) {
  ordered_json j;
  j["prune"] = spec.prune;
  j["base_seed"] = spec.seed;
  j["runs"] = spec.runs;
  switch (spec.algorithm) {
    case Algorithm::anth_ls:
      j["ants"] = spec.config.ants;
      j["rho"] = spec.config.rho;
      j["tau0"] = spec.config.tau0;
      j["tau_min"] = spec.config.tau_min;
      j["conv"] = spec.config.g_conv;
      j["max_gens"] = spec.config.max_generations;
      j["stag"] = spec.config.i_stag;
      j["ls3_probability"] = spec.config.ls3_probability;
      j["expansion"] = spec.config.expansion == ExpansionMode::full_expansion
                           ? "full"
                           : "single-successor";
      break;
    case Algorithm::msls_iii:
    case Algorithm::msls_iv:
      j["restarts"] = spec.restarts;
      j["stag"] = spec.config.i_stag;
      break;
    case Algorithm::exact:
      j["vertex_budget"] = spec.exact_budget;
      break;
  }
  return j;
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

AggregateReport run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  GraphFormat format =
      spec.format.value_or(format_from_extension(spec.input));
  Graph g = read_graph(spec.input, format);
  return run_experiment(g, spec);
}

AggregateReport run_experiment(const Graph& g, const ExperimentSpec& spec) {
  spec.validate();
  AggregateReport agg;
  agg.spec = spec;
  agg.instance = spec.instance_name.empty() ? spec.input.stem().string()
                                            : spec.instance_name;
  agg.algorithm = spec.algorithm;
  agg.vertices = g.vertex_count();
  agg.edges = g.edge_count();
  agg.pruned_vertices = prune_leaves(g).pruned.vertex_count();

  for (std::size_t r = 0; r < spec.runs; ++r) {
    RunRecord rec;
    rec.seed = spec.seed + r;
    rec.report = run_once(g, spec, rec.seed);
    auto verdict = validate_cycle(g, rec.report.best_cycle);
    if (!verdict) {
      throw InvalidCycleError("run " + std::to_string(r) + ": " +
                              to_string(verdict.violation) + " (" +
                              verdict.detail + ")");
    }
    agg.best_length = std::max(agg.best_length, rec.report.best_length);
    agg.runs.push_back(std::move(rec));
  }

  double generations = 0.0;
  double wall = 0.0;
  for (const auto& rec : agg.runs) {
    if (rec.report.best_length == agg.best_length) ++agg.successes;
    generations += static_cast<double>(rec.report.generations_used);
    wall += rec.report.wall_time;
  }
  const double runs = static_cast<double>(agg.runs.size());
  agg.success_rate = static_cast<double>(agg.successes) / runs;
  agg.mean_generations = generations / runs;
  agg.mean_wall_time = wall / runs;
  return agg;
}

std::string report_json(const AggregateReport& report, const Graph& g,
                        bool with_timing) {
  ordered_json j;
  j["instance"] = report.instance;
  j["algorithm"] = to_string(report.algorithm);
  j["graph"] = {{"vertices", report.vertices},
                {"edges", report.edges},
                {"pruned_vertices", report.pruned_vertices}};
  j["config"] = config_json(report.spec);

  ordered_json runs = ordered_json::array();
  for (const auto& rec : report.runs) {
    ordered_json run;
    run["seed"] = rec.seed;
    run["best_length"] = rec.report.best_length;
    ordered_json cycle = ordered_json::array();
    for (Vertex v : rec.report.best_cycle.vertices) cycle.push_back(g.label(v));
    run["cycle"] = std::move(cycle);
    run["generations"] = rec.report.generations_used;
    run["terminated_by"] = to_string(rec.report.terminated_by);
    if (with_timing) {
      run["wall_time_s"] =
          std::round(rec.report.wall_time * 1000.0) / 1000.0;
    }
    if (!rec.report.generation_trace.empty()) {
      ordered_json trace = ordered_json::array();
      for (auto [gen, len] : rec.report.generation_trace) {
        trace.push_back({gen, len});
      }
      run["trace"] = std::move(trace);
    }
    runs.push_back(std::move(run));
  }
  j["runs"] = std::move(runs);

  ordered_json agg;
  agg["best_length"] = report.best_length;
  agg["successes"] = report.successes;
  agg["runs"] = report.runs.size();
  agg["success_rate"] = report.success_rate;
  agg["mean_generations"] = report.mean_generations;
  if (with_timing) {
    agg["mean_wall_time_s"] =
        std::round(report.mean_wall_time * 1000.0) / 1000.0;
  }
  j["aggregate"] = std::move(agg);
  return j.dump(2) + "\n";
}

void export_cycle_dot(const Graph& g, const Cycle& c, std::ostream& out) {
  auto verdict = validate_cycle(g, c);
  if (!verdict) {
    throw InvalidCycleError(std::string("cannot export cycle: ") +
                            to_string(verdict.violation) + " (" +
                            verdict.detail + ")");
  }
  std::vector<char> on_cycle(g.edge_count(), 0);
  for (std::size_t i = 0; i < c.length(); ++i) {
    on_cycle[g.edge_id(c.vertices[i], c.vertices[(i + 1) % c.length()])] = 1;
  }
  auto quoted = [&g](Vertex v) { return "\"" + g.label(v) + "\""; };
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quoted(v) << ";\n";
  }
  // Edge ids are assigned in sorted (u < v) order.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    out << "  " << quoted(u) << " -- " << quoted(v);
    if (on_cycle[e]) out << " [color=red, penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
}

namespace {

std::vector<const AggregateReport*> sorted_by_instance(
    std::span<const AggregateReport> reports) {
  std::vector<const AggregateReport*> rows;
  for (const auto& r : reports) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](auto* a, auto* b) {
    return a->instance < b->instance;
  });
  return rows;
}

}  // namespace

std::string summarize(std::span<const AggregateReport> reports) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %8s %9s %12s %10s\n", "graph",
                "length", "success", "generations", "time");
  out << line;
  for (const auto* r : sorted_by_instance(reports)) {
    std::string success =
        std::to_string(r->successes) + "/" + std::to_string(r->runs.size());
    std::snprintf(line, sizeof line, "%-20s %8zu %9s %12.1f %9ss\n",
                  r->instance.c_str(), r->best_length, success.c_str(),
                  r->mean_generations,
                  seconds_text(r->mean_wall_time).c_str());
    out << line;
  }
  return out.str();
}

std::string summarize_json(std::span<const AggregateReport> reports) {
  ordered_json rows = ordered_json::array();
  for (const auto* r : sorted_by_instance(reports)) {
    ordered_json row;
    row["graph"] = r->instance;
    row["algorithm"] = to_string(r->algorithm);
    row["cycle_length"] = r->best_length;
    row["successes"] = r->successes;
    row["runs"] = r->runs.size();
    row["average_generations"] = r->mean_generations;
    row["average_time_s"] = std::round(r->mean_wall_time * 1000.0) / 1000.0;
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

}  // namespace lcycle
