// Command-line front end: runs one experiment on one instance file and
// prints a summary row. See README.md for the flag reference.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lcycle/bench.hpp"
#include "lcycle/io.hpp"
#include "lcycle/pheromone.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace lcycle;

  CLI::App app{"Longest simple cycle solvers: ANTH-LS, MSLS and exact search"};
  ExperimentSpec spec;
  std::string input;
  std::string format_name;
  std::string algo_name = "anth-ls";
  std::string report_path;
  std::string dot_path;
  bool no_prune = false;

  app.add_option("--input", input, "Graph file")->required();
  app.add_option("--format", format_name,
                 "edgelist|gml|dimacs (default: from extension)");
  app.add_option("--algo", algo_name, "anth-ls|msls-iii|msls-iv|exact")
      ->capture_default_str();
  app.add_option("--runs", spec.runs, "Independent runs")->capture_default_str();
  app.add_option("--seed", spec.seed, "Base seed; run r uses seed + r")
      ->capture_default_str();
  app.add_option("--ants", spec.config.ants, "Ants per generation")
      ->capture_default_str();
  app.add_option("--rho", spec.config.rho, "Evaporation factor")
      ->capture_default_str();
  app.add_option("--tau0", spec.config.tau0, "Initial pheromone")
      ->capture_default_str();
  app.add_option("--tau-min", spec.config.tau_min, "Pheromone floor")
      ->capture_default_str();
  app.add_option("--conv", spec.config.g_conv,
                 "Generations of equal-length ants that signal convergence")
      ->capture_default_str();
  app.add_option("--max-gens", spec.config.max_generations,
                 "Generation cap")
      ->capture_default_str();
  app.add_option("--stag", spec.config.i_stag,
                 "Local search: swap steps without growth before stopping")
      ->capture_default_str();
  app.add_option("--restarts", spec.restarts, "MSLS restarts")
      ->capture_default_str();
  app.add_flag("--no-prune", no_prune, "Skip iterative leaf pruning");
  app.add_option("--report", report_path, "Write the JSON report here");
  app.add_option("--dot", dot_path,
                 "Write the graph with the best cycle highlighted (DOT)");
  app.add_flag("--trace", spec.trace, "Record best length per generation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  spec.input = input;
  spec.prune = !no_prune;
  if (!format_name.empty()) {
    spec.format = parse_format(format_name);
    if (!spec.format) {
      std::cerr << "error: unknown --format '" << format_name << "'\n";
      return kExitUsage;
    }
  }
  auto algo = parse_algorithm(algo_name);
  if (!algo) {
    std::cerr << "error: unknown --algo '" << algo_name << "'\n";
    return kExitUsage;
  }
  spec.algorithm = *algo;

  try {
    spec.validate();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Graph g;
  try {
    g = read_graph(spec.input,
                   spec.format.value_or(format_from_extension(spec.input)));
  } catch (const ParseError& e) {
    std::cerr << "error: " << input << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  AggregateReport report;
  try {
    report = run_experiment(g, spec);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cout << summarize({&report, 1});

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return kExitIo;
    }
    out << report_json(report, g);
  }
  if (!dot_path.empty()) {
    const RunRecord* best = &report.runs.front();
    for (const auto& rec : report.runs) {
      if (rec.report.best_length > best->report.best_length) best = &rec;
    }
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "error: cannot write " << dot_path << "\n";
      return kExitIo;
    }
    export_cycle_dot(g, best->report.best_cycle, out);
  }
  return 0;
}
