#include "lcycle/solvers.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "lcycle/pheromone.hpp"
#include "lcycle/random.hpp"

namespace lcycle {

namespace {

// Solver input after optional leaf pruning, with the way back to the
// caller's vertex ids.
struct Prepared {
  PruneResult pr;
  bool pruned = false;

  const Graph& graph(const Graph& original) const {
    return pruned ? pr.pruned : original;
  }
  Cycle restore(const Cycle& c) const { return pruned ? to_original(pr, c) : c; }
};

Prepared prepare(const Graph& g, bool prune) {
  Prepared p;
  p.pruned = prune;
  if (prune) p.pr = prune_leaves(g);
  return p;
}

bool has_cycle(const Graph& g) {
  return prune_leaves(g).pruned.vertex_count() > 0;
}

void finish(RunReport& report, const Graph& original, const Cycle& best_local,
            const Prepared& prep,
            std::chrono::steady_clock::time_point start) {
  report.best_cycle = prep.restore(best_local);
  report.best_length = report.best_cycle.length();
  auto verdict = validate_cycle(original, report.best_cycle);
  if (!verdict) {
    throw InvalidCycleError(std::string("solver produced invalid cycle: ") +
                            to_string(verdict.violation) + " (" +
                            verdict.detail + ")");
  }
  report.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tau_min > 0.0)) throw ConfigError("tau-min must be positive");
  if (!(tau0 >= tau_min)) throw ConfigError("tau0 must be >= tau-min");
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("rho must lie in (0,1)");
  if (ants == 0) throw ConfigError("ants must be positive");
  if (g_conv == 0) throw ConfigError("conv must be positive");
  if (max_generations == 0) throw ConfigError("max-gens must be positive");
  if (i_stag == 0) throw ConfigError("stag must be positive");
  if (!(ls3_probability >= 0.0 && ls3_probability <= 1.0)) {
    throw ConfigError("LS-III probability must lie in [0,1]");
  }
}

const char* to_string(Termination t) {
  return t == Termination::convergence ? "convergence" : "generation-cap";
}

RunReport anth_ls(const Graph& g, const SolverConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  Prepared prep = prepare(g, cfg.prune);
  const Graph& work = prep.graph(g);

  if (!has_cycle(work)) {
    report.generations_used = 1;
    report.terminated_by = Termination::convergence;
    if (cfg.record_trace) report.generation_trace.emplace_back(1, 0);
    finish(report, g, {}, prep, start);
    return report;
  }

  PheromoneState ps = init_pheromones(work, cfg.tau0, cfg.tau_min);
  ProbeWorkspace ws(work.vertex_count());
  Cycle best;
  std::size_t f_star = 0;
  std::size_t streak = 0;
  std::size_t streak_length = 0;
  std::vector<Cycle> improved(cfg.ants);

  report.terminated_by = Termination::generation_cap;
  std::size_t generation = 0;
  while (generation < cfg.max_generations) {
    ++generation;
    for (std::size_t a = 0; a < cfg.ants; ++a) {
      Rng rng = substream(cfg.seed, {generation, a});
      LsBudget budget{cfg.i_stag, uniform01(rng) < cfg.ls3_probability
                                      ? LsVariant::ls3
                                      : LsVariant::ls4};
      Cycle c = construct_cycle(work, ps, rng, cfg.expansion, ws);
      improved[a] = local_search(work, std::move(c), budget, rng);
    }

    std::size_t best_ant = 0;
    bool uniform_length = true;
    for (std::size_t a = 1; a < cfg.ants; ++a) {
      if (improved[a].length() > improved[best_ant].length()) best_ant = a;
      if (improved[a].length() != improved[0].length()) uniform_length = false;
    }
    const Cycle& generation_best = improved[best_ant];
    if (generation_best.length() > f_star) {
      f_star = generation_best.length();
      best = generation_best;
    }
    update_pheromones(ps, work, generation_best, f_star, cfg.rho);
    if (cfg.record_trace) report.generation_trace.emplace_back(generation, f_star);

    if (uniform_length && streak > 0 &&
        improved[0].length() == streak_length) {
      ++streak;
    } else if (uniform_length) {
      streak = 1;
      streak_length = improved[0].length();
    } else {
      streak = 0;
    }
    if (streak >= cfg.g_conv) {
      report.terminated_by = Termination::convergence;
      break;
    }
  }
  report.generations_used = generation;
  finish(report, g, best, prep, start);
  return report;
}

RunReport msls(const Graph& g, std::size_t restarts, LsVariant variant,
               std::size_t i_stag, std::uint64_t seed, bool prune) {
  if (restarts == 0) throw ConfigError("restarts must be positive");
  if (i_stag == 0) throw ConfigError("stag must be positive");
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  Prepared prep = prepare(g, prune);
  const Graph& work = prep.graph(g);

  if (!has_cycle(work)) {
    report.generations_used = 1;
    report.terminated_by = Termination::convergence;
    finish(report, g, {}, prep, start);
    return report;
  }

  const PheromoneState uniform =
      init_pheromones(work, SolverConfig{}.tau0, SolverConfig{}.tau_min);
  ProbeWorkspace ws(work.vertex_count());
  const LsBudget budget{i_stag, variant};
  Cycle best;
  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng = substream(seed, {r});
    Cycle c = construct_cycle(work, uniform, rng,
                              ExpansionMode::full_expansion, ws);
    c = local_search(work, std::move(c), budget, rng);
    if (c.length() > best.length()) best = std::move(c);
  }
  report.generations_used = restarts;
  report.terminated_by = Termination::generation_cap;
  finish(report, g, best, prep, start);
  return report;
}

namespace {

class ExactSearch {
 public:
  explicit ExactSearch(const Graph& g)
      : g_(g), on_path_(g.vertex_count(), 0) {}

  Cycle run() {
    const std::size_t n = g_.vertex_count();
    for (Vertex root = 0; root < n; ++root) {
      // Cycles through root only use vertices >= root.
      if (n - root <= best_.length()) break;
      root_ = root;
      path_.assign(1, root);
      on_path_[root] = 1;
      extend(root);
      on_path_[root] = 0;
    }
    return best_;
  }

 private:
  void extend(Vertex v) {
    const std::size_t k = path_.size();
    if (k >= 3 && k > best_.length() && g_.adjacent(v, root_)) {
      best_.vertices = path_;
    }
    for (Vertex w : g_.neighbors(v)) {
      if (w <= root_ || on_path_[w]) continue;
      on_path_[w] = 1;
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      on_path_[w] = 0;
    }
  }

  const Graph& g_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  Vertex root_ = 0;
  Cycle best_;
};

}  // namespace

Cycle exact_longest_cycle(const Graph& g, std::size_t vertex_budget) {
  if (g.vertex_count() > vertex_budget) {
    throw BudgetExceeded("exact search refuses " +
                         std::to_string(g.vertex_count()) +
                         " vertices (budget " + std::to_string(vertex_budget) +
                         ")");
  }
  return ExactSearch(g).run();
}

}  // namespace lcycle
