#include "lcycle/construction.hpp"

#include <algorithm>

namespace lcycle {

void ProbeWorkspace::resize(std::size_t n) {
  depth_.assign(n, 0);
  expanded_.assign(n, 0);
  parent_.assign(n, 0);
  stamp_.assign(n, 0);
  on_trace_.assign(n, 0);
  stack_.clear();
}

namespace {

// Follows parent pointers from `tail` back to `root` and returns the closed
// cycle [root, ..., tail], or an empty cycle if the chain is not a simple
// path of graph edges ending in a neighbour of root.
Cycle trace_cycle(const Graph& g, Vertex root, Vertex tail,
                  std::span<const Vertex> parent, std::vector<char>& on_trace) {
  Cycle c;
  const std::size_t n = g.vertex_count();
  Vertex v = tail;
  bool ok = true;
  while (true) {
    if (on_trace[v] || c.vertices.size() > n) {
      ok = false;
      break;
    }
    on_trace[v] = 1;
    c.vertices.push_back(v);
    if (v == root) break;
    Vertex p = parent[v];
    if (!g.adjacent(v, p)) {
      ok = false;
      break;
    }
    v = p;
  }
  for (Vertex u : c.vertices) on_trace[u] = 0;
  if (!ok || c.vertices.size() < 3 || !g.adjacent(tail, root)) return {};
  std::reverse(c.vertices.begin(), c.vertices.end());
  return c;
}

}  // namespace

Cycle probe_from_root(const Graph& g, const PheromoneState& ps, Vertex root,
                      Rng& rng, ExpansionMode mode, ProbeWorkspace& ws) {
  const std::size_t n = g.vertex_count();
  if (ws.depth_.size() != n) ws.resize(n);
  std::fill(ws.depth_.begin(), ws.depth_.end(), 0U);
  std::fill(ws.expanded_.begin(), ws.expanded_.end(), char{0});
  std::fill(ws.stamp_.begin(), ws.stamp_.end(), 0U);
  ws.stack_.clear();

  std::uint32_t clock = 0;
  auto push = [&](Vertex w) {
    ws.stamp_[w] = ++clock;
    ws.stack_.push_back({w, clock});
  };

  Cycle best;
  std::size_t best_len = 0;
  auto try_close = [&](Vertex v, std::uint32_t dc) {
    if (dc < 2 || dc + 1 <= best_len) return;
    Cycle c = trace_cycle(g, root, v, ws.parent_, ws.on_trace_);
    if (c.length() > best_len) {
      best_len = c.length();
      best = std::move(c);
    }
  };

  push(root);
  while (!ws.stack_.empty()) {
    auto entry = ws.stack_.back();
    ws.stack_.pop_back();
    Vertex v = entry.v;
    if (ws.stamp_[v] != entry.stamp || ws.expanded_[v]) continue;
    ws.expanded_[v] = 1;
    const std::uint32_t dc = ws.depth_[v];

    auto eligible = [&](Vertex w) {
      return !ws.expanded_[w] && w != root && ws.depth_[w] <= dc + 1;
    };

    auto nbrs = g.neighbors(v);
    auto edges = g.incident_edges(v);
    if (mode == ExpansionMode::single_successor) {
      if (nbrs.empty()) continue;
      Vertex w = sample_neighbor(ps, g, v, nbrs, rng);
      if (eligible(w)) {
        ws.depth_[w] = dc + 1;
        ws.parent_[w] = v;
        push(w);
      } else if (w == root) {
        try_close(v, dc);
      }
      continue;
    }

    ws.candidates_.clear();
    ws.weights_.clear();
    bool sees_root = false;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      Vertex w = nbrs[i];
      if (w == root) {
        sees_root = true;
      } else if (eligible(w)) {
        ws.candidates_.push_back(w);
        ws.weights_.push_back(ps[edges[i]]);
      }
    }
    if (sees_root) try_close(v, dc);
    permute_by_weight(ws.candidates_, ws.weights_, rng);
    for (auto it = ws.candidates_.rbegin(); it != ws.candidates_.rend(); ++it) {
      ws.depth_[*it] = dc + 1;
      ws.parent_[*it] = v;
      push(*it);
    }
  }
  return best;
}

Cycle probe_from_root(const Graph& g, const PheromoneState& ps, Vertex root,
                      Rng& rng, ExpansionMode mode) {
  ProbeWorkspace ws(g.vertex_count());
  return probe_from_root(g, ps, root, rng, mode, ws);
}

Cycle construct_cycle(const Graph& g, const PheromoneState& ps, Rng& rng,
                      ExpansionMode mode, ProbeWorkspace& ws) {
  Cycle best;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    Cycle c = probe_from_root(g, ps, root, rng, mode, ws);
    if (c.length() > best.length()) best = std::move(c);
  }
  return best;
}

Cycle construct_cycle(const Graph& g, const PheromoneState& ps, Rng& rng,
                      ExpansionMode mode) {
  ProbeWorkspace ws(g.vertex_count());
  return construct_cycle(g, ps, rng, mode, ws);
}

}  // namespace lcycle
