#ifndef LCYCLE_CONSTRUCTION_HPP
#define LCYCLE_CONSTRUCTION_HPP

#include <cstdint>
#include <vector>

#include "lcycle/graph.hpp"
#include "lcycle/pheromone.hpp"
#include "lcycle/random.hpp"

namespace lcycle {

/// How an expanded vertex hands work to its neighbours.
///
/// full_expansion pushes every eligible neighbour, ordered by pheromone
/// roulette so the most preferred one is expanded next. single_successor
/// draws one neighbour per expansion (a biased walk) and is kept for
/// comparison.
enum class ExpansionMode : std::uint8_t { full_expansion, single_successor };

/// Reusable scratch buffers for probes on one graph. Not thread safe; give
/// each thread its own.
class ProbeWorkspace {
 public:
  explicit ProbeWorkspace(std::size_t n = 0) { resize(n); }
  void resize(std::size_t n);

 private:
  friend Cycle probe_from_root(const Graph&, const PheromoneState&, Vertex,
                               Rng&, ExpansionMode, ProbeWorkspace&);
  struct StackEntry {
    Vertex v;
    std::uint32_t stamp;
  };
  std::vector<std::uint32_t> depth_;
  std::vector<char> expanded_;
  std::vector<Vertex> parent_;
  // Entry stamps implement "remove w from the stack": only the entry whose
  // stamp matches stamp_[w] is live.
  std::vector<std::uint32_t> stamp_;
  std::vector<StackEntry> stack_;
  std::vector<Vertex> candidates_;
  std::vector<double> weights_;
  std::vector<char> on_trace_;
};

/// Pheromone-biased DFS from `root`, recording the longest cycle that closes
/// back at the root. Returns an empty cycle if none closes.
Cycle probe_from_root(const Graph& g, const PheromoneState& ps, Vertex root,
                      Rng& rng,
                      ExpansionMode mode = ExpansionMode::full_expansion);

Cycle probe_from_root(const Graph& g, const PheromoneState& ps, Vertex root,
                      Rng& rng, ExpansionMode mode, ProbeWorkspace& ws);

/// Runs probe_from_root from every vertex in ascending id order and keeps
/// the longest cycle (first found on ties). Empty iff no probe closes a
/// cycle, i.e. g is acyclic.
Cycle construct_cycle(const Graph& g, const PheromoneState& ps, Rng& rng,
                      ExpansionMode mode = ExpansionMode::full_expansion);

Cycle construct_cycle(const Graph& g, const PheromoneState& ps, Rng& rng,
                      ExpansionMode mode, ProbeWorkspace& ws);

}  // namespace lcycle

#endif  // LCYCLE_CONSTRUCTION_HPP
