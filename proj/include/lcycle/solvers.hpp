#ifndef LCYCLE_SOLVERS_HPP
#define LCYCLE_SOLVERS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lcycle/construction.hpp"
#include "lcycle/graph.hpp"
#include "lcycle/local_search.hpp"

namespace lcycle {

struct SolverConfig {
  double tau0 = 10.0;
  double rho = 0.95;
  double tau_min = 0.01;
  std::size_t ants = 5;
  std::size_t g_conv = 50;
  std::size_t max_generations = 10000;
  std::size_t i_stag = 100;
  double ls3_probability = 0.5;
  std::uint64_t seed = 0;
  bool prune = true;
  bool record_trace = false;
  ExpansionMode expansion = ExpansionMode::full_expansion;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

enum class Termination : std::uint8_t { convergence, generation_cap };

const char* to_string(Termination t);

struct RunReport {
  Cycle best_cycle;  // original vertex ids
  std::size_t best_length = 0;
  std::size_t generations_used = 0;
  double wall_time = 0.0;  // seconds
  /// (generation, best length so far); filled when requested.
  std::vector<std::pair<std::size_t, std::size_t>> generation_trace;
  Termination terminated_by = Termination::convergence;
};

/// Thrown when a solver would emit a cycle that fails validation against the
/// input graph. Indicates a bug, never expected in practice.
class InvalidCycleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The ant-based heuristic: per generation, `ants` pheromone-biased
/// constructions each improved by LS-III (probability ls3_probability) or
/// LS-IV; the generation's longest cycle has its edges evaporated and all
/// other edges reinforced. Stops after g_conv consecutive generations whose
/// improved cycles all share one common length, or at max_generations.
RunReport anth_ls(const Graph& g, const SolverConfig& cfg);

/// Multi-start local search: `restarts` unbiased randomized DFS
/// constructions each followed by local search with a fixed variant.
RunReport msls(const Graph& g, std::size_t restarts, LsVariant variant,
               std::size_t i_stag, std::uint64_t seed, bool prune = true);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultExactBudget = 16;

/// Exhaustive longest simple cycle by backtracking. Refuses (BudgetExceeded)
/// graphs with more than vertex_budget vertices.
Cycle exact_longest_cycle(const Graph& g,
                          std::size_t vertex_budget = kDefaultExactBudget);

}  // namespace lcycle

#endif  // LCYCLE_SOLVERS_HPP
