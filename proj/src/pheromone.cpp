#include "lcycle/pheromone.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace lcycle {

PheromoneState::PheromoneState(std::size_t edge_count, double tau0,
                               double tau_min)
    : tau0_(tau0), tau_min_(tau_min) {
  if (!(tau_min > 0.0) || !std::isfinite(tau_min)) {
    throw ConfigError("tau_min must be positive");
  }
  if (!(tau0 >= tau_min) || !std::isfinite(tau0)) {
    throw ConfigError("tau0 must be >= tau_min");
  }
  tau_.assign(edge_count, tau0);
}

void PheromoneState::set(EdgeId e, double value) {
  tau_[e] = std::max(tau_min_, value);
}

void PheromoneState::evaporate(EdgeId e, double rho) {
  tau_[e] = std::max(tau_min_, rho * tau_[e]);
}

PheromoneState init_pheromones(const Graph& g, double tau0, double tau_min) {
  return PheromoneState(g.edge_count(), tau0, tau_min);
}

Vertex sample_neighbor(const PheromoneState& ps, const Graph& g, Vertex v,
                       std::span<const Vertex> candidates, Rng& rng) {
  if (candidates.empty()) {
    throw ContractViolation("sample_neighbor: empty candidate set");
  }
  double total = 0.0;
  for (Vertex w : candidates) total += ps[g.edge_id(v, w)];
  double r = uniform01(rng) * total;
  for (Vertex w : candidates) {
    r -= ps[g.edge_id(v, w)];
    if (r < 0.0) return w;
  }
  // Rounding left r marginally non-negative.
  return candidates.back();
}

void permute_by_weight(std::span<Vertex> items, std::span<double> weights,
                       Rng& rng) {
  const std::size_t k = items.size();
  if (k < 2) return;
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) total += weights[i];
  for (std::size_t pos = 0; pos + 1 < k; ++pos) {
    double r = uniform01(rng) * total;
    std::size_t pick = k - 1;
    for (std::size_t i = pos; i < k; ++i) {
      r -= weights[i];
      if (r < 0.0) {
        pick = i;
        break;
      }
    }
    total -= weights[pick];
    std::swap(items[pos], items[pick]);
    std::swap(weights[pos], weights[pick]);
  }
}

void shuffle_by_pheromone(const PheromoneState& ps, const Graph& g, Vertex v,
                          std::span<Vertex> candidates,
                          std::vector<double>& weights, Rng& rng) {
  weights.resize(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    weights[i] = ps[g.edge_id(v, candidates[i])];
  }
  permute_by_weight(candidates, weights, rng);
}

std::vector<Vertex> sample_visit_order(const PheromoneState& ps,
                                       const Graph& g, Vertex v,
                                       std::span<const Vertex> candidates,
                                       Rng& rng) {
  std::vector<Vertex> order(candidates.begin(), candidates.end());
  std::vector<double> weights;
  shuffle_by_pheromone(ps, g, v, order, weights, rng);
  return order;
}

double reinforcement(std::size_t f_best, std::size_t f_star) {
  return 1.0 / (10.0 - static_cast<double>(f_best) +
                static_cast<double>(f_star));
}

void update_pheromones(PheromoneState& ps, const Graph& g, const Cycle& best,
                       std::size_t f_star, double rho) {
  const std::size_t f_best = best.length();
  if (f_star < f_best) {
    throw ContractViolation("update_pheromones: f* (" + std::to_string(f_star) +
                            ") < f(A_best) (" + std::to_string(f_best) + ")");
  }
  const double bonus = reinforcement(f_best, f_star);
  assert(bonus > 0.0 && bonus <= 0.1);

  std::vector<char> on_best(ps.size(), 0);
  const auto& vs = best.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    EdgeId e = g.edge_id(vs[i], vs[(i + 1) % vs.size()]);
    if (e == kNoEdge) {
      throw ContractViolation("update_pheromones: best cycle uses a non-edge");
    }
    on_best[e] = 1;
  }
  for (EdgeId e = 0; e < ps.size(); ++e) {
    if (on_best[e]) {
      ps.evaporate(e, rho);
    } else {
      ps.deposit(e, bonus);
    }
  }
}

}  // namespace lcycle
