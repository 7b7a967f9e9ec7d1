#ifndef LCYCLE_PHEROMONE_HPP
#define LCYCLE_PHEROMONE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lcycle/graph.hpp"
#include "lcycle/random.hpp"

namespace lcycle {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Per-edge pheromone trail, indexed by Graph edge id. Every value stays at
/// or above tau_min.
class PheromoneState {
 public:
  PheromoneState(std::size_t edge_count, double tau0, double tau_min);

  double operator[](EdgeId e) const { return tau_[e]; }
  std::span<const double> values() const { return tau_; }
  std::size_t size() const { return tau_.size(); }
  double tau0() const { return tau0_; }
  double tau_min() const { return tau_min_; }

  /// Sets edge e, clamped to tau_min. Mostly for tests and replays.
  void set(EdgeId e, double value);

  /// Evaporation on e: tau <- max(tau_min, rho * tau).
  void evaporate(EdgeId e, double rho);
  void deposit(EdgeId e, double amount) { tau_[e] += amount; }

 private:
  std::vector<double> tau_;
  double tau0_;
  double tau_min_;
};

/// Every edge of g starts at tau0. Throws ConfigError unless
/// tau0 >= tau_min > 0.
PheromoneState init_pheromones(const Graph& g, double tau0, double tau_min);

/// Picks w from `candidates` (neighbours of v) with probability
/// tau{v,w} / sum over candidates. One draw from rng.
Vertex sample_neighbor(const PheromoneState& ps, const Graph& g, Vertex v,
                       std::span<const Vertex> candidates, Rng& rng);

/// Random permutation of `candidates` built by repeated sample_neighbor
/// without replacement; front() is the most preferred successor.
std::vector<Vertex> sample_visit_order(const PheromoneState& ps,
                                       const Graph& g, Vertex v,
                                       std::span<const Vertex> candidates,
                                       Rng& rng);

/// Plackett-Luce permutation of `items` in place: each position is filled by
/// a roulette draw over the remaining items. `weights` is permuted alongside.
void permute_by_weight(std::span<Vertex> items, std::span<double> weights,
                       Rng& rng);

/// In-place variant used on hot paths: permutes `candidates` with the same
/// distribution as sample_visit_order. `weights` is scratch space.
void shuffle_by_pheromone(const PheromoneState& ps, const Graph& g, Vertex v,
                          std::span<Vertex> candidates,
                          std::vector<double>& weights, Rng& rng);

/// Reinforcement increment applied to edges off the best cycle:
/// 1 / (10 - f_best + f_star).
double reinforcement(std::size_t f_best, std::size_t f_star);

/// Penalises the edges of `best` (closing edge included) by evaporation and
/// reinforces every other edge. An empty `best` reinforces all edges with
/// f_best = 0. Throws ContractViolation if f_star < best.length().
void update_pheromones(PheromoneState& ps, const Graph& g, const Cycle& best,
                       std::size_t f_star, double rho);

}  // namespace lcycle

#endif  // LCYCLE_PHEROMONE_HPP
