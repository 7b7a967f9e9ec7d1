// Fixtures and independent reference implementations shared by the tests.
// The oracles here are written from the problem definitions, deliberately
// without reusing library internals.

#ifndef LCYCLE_TESTS_SUPPORT_HPP
#define LCYCLE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "lcycle/graph.hpp"

namespace lcycle::testing {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline Graph make(std::size_t n, const EdgeList& edges) {
  return Graph::from_edges(n, edges);
}

/// n-ring 0..n-1 plus `extra` edges, which may introduce further vertices.
inline Graph ring(std::size_t n, EdgeList extra = {}) {
  EdgeList e = extra;
  std::size_t order = n;
  for (auto [u, v] : extra) order = std::max<std::size_t>({order, u + 1, v + 1});
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return make(order, e);
}

inline Graph path(std::size_t n) {
  EdgeList e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make(n, e);
}

inline Graph complete(std::size_t n) {
  EdgeList e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make(n, e);
}

inline Graph triangle() { return complete(3); }

inline Graph petersen() {
  EdgeList e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer ring
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return make(10, e);
}

inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  EdgeList e;
  for (Vertex v = 1; v < n; ++v) {
    e.emplace_back(static_cast<Vertex>(rng() % v), v);
  }
  return make(n, e);
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability p.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<Vertex, Vertex>> seen;
  EdgeList e;
  auto add = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    if (seen.insert({a, b}).second) e.emplace_back(a, b);
  };
  for (std::size_t i = 1; i < n; ++i) add(order[rng() % i], order[i]);
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) add(a, b);
  return make(n, e);
}

inline bool has_edge(const EdgeList& edges, Vertex a, Vertex b) {
  for (auto [u, v] : edges) {
    if ((u == a && v == b) || (u == b && v == a)) return true;
  }
  return false;
}

inline EdgeList edge_list(const Graph& g) {
  return EdgeList(g.edges().begin(), g.edges().end());
}

/// Longest simple cycle by enumerating every ordered vertex subset. Only
/// meant for n <= 8.
inline std::size_t naive_longest_cycle(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
      if (mask & (1U << v)) subset.push_back(v);
    if (subset.size() < 3 || subset.size() <= best) continue;
    do {
      bool closed = true;
      for (std::size_t i = 0; i < subset.size() && closed; ++i) {
        closed = adj[subset[i]][subset[(i + 1) % subset.size()]];
      }
      if (closed) {
        best = subset.size();
        break;
      }
    } while (std::next_permutation(subset.begin(), subset.end()));
  }
  return best;
}

/// Whether vertex v lies on some simple cycle (n <= 10).
inline bool on_some_cycle(std::size_t n, const EdgeList& edges, Vertex v) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> used(n, 0);
  std::function<bool(Vertex, std::size_t)> walk = [&](Vertex u,
                                                       std::size_t len) {
    for (Vertex w : adj[u]) {
      if (w == v && len >= 3) return true;
      if (!used[w] && w != v) {
        used[w] = 1;
        bool found = walk(w, len + 1);
        used[w] = 0;
        if (found) return true;
      }
    }
    return false;
  };
  used[v] = 1;
  return walk(v, 1);
}

/// Plain interpreter of the pheromone-free probe: a DFS from root where each
/// expansion pushes all eligible neighbours (unexpanded, not root, depth <=
/// d_c + 1) in an order supplied by `order`, and a closing edge to root from
/// depth >= 2 records the parent chain if it is longer than the best so far.
/// The interpreter explores every choice `order` offers and reports the
/// resulting length distribution.
class ProbeInterpreter {
 public:
  explicit ProbeInterpreter(const Graph& g) : g_(g) {}

  /// Exact distribution of probe lengths from `root` when every visit order
  /// of each expansion's candidates is equally likely.
  std::map<std::size_t, double> exact_distribution(Vertex root) const {
    std::map<std::size_t, double> dist;
    State s(g_.vertex_count());
    s.stack.push_back(root);
    explore(root, s, 1.0, dist);
    return dist;
  }

  /// One probe with uniformly shuffled visit orders.
  std::size_t sample(Vertex root, std::mt19937_64& rng) const {
    State s(g_.vertex_count());
    s.stack.push_back(root);
    while (true) {
      std::vector<Vertex> cand;
      if (!advance(root, s, cand)) return s.best;
      std::shuffle(cand.begin(), cand.end(), rng);
      push_all(s, cand);
    }
  }

 private:
  struct State {
    explicit State(std::size_t n) : depth(n, 0), expanded(n, 0), parent(n, 0) {}
    std::vector<std::size_t> depth;
    std::vector<char> expanded;
    std::vector<Vertex> parent;
    // A stack slot is live only while its position is the vertex's latest.
    std::vector<Vertex> stack;
    std::vector<std::size_t> latest_slot;
    std::size_t best = 0;
    Vertex current = 0;
  };

  // Pops to the next live vertex, handles its closing edge and collects its
  // eligible neighbours. Returns false when the stack runs dry.
  bool advance(Vertex root, State& s, std::vector<Vertex>& cand) const {
    const std::size_t n = g_.vertex_count();
    if (s.latest_slot.size() != n) s.latest_slot.assign(n, 0);
    while (!s.stack.empty()) {
      std::size_t slot = s.stack.size() - 1;
      Vertex v = s.stack.back();
      s.stack.pop_back();
      if (s.expanded[v]) continue;
      if (v != root && s.latest_slot[v] != slot) continue;
      s.expanded[v] = 1;
      std::size_t dc = s.depth[v];
      for (Vertex w : g_.neighbors(v)) {
        if (w == root) {
          if (dc >= 2 && dc + 1 > s.best) close(root, v, s);
        } else if (!s.expanded[w] && s.depth[w] <= dc + 1) {
          cand.push_back(w);
        }
      }
      s.current = v;
      return true;
    }
    return false;
  }

  // Pushes cand so that cand[0] is popped first.
  void push_all(State& s, const std::vector<Vertex>& cand) const {
    std::size_t dc = s.depth[s.current];
    for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
      s.depth[*it] = dc + 1;
      s.parent[*it] = s.current;
      s.latest_slot[*it] = s.stack.size();
      s.stack.push_back(*it);
    }
  }

  void close(Vertex root, Vertex tail, State& s) const {
    std::vector<char> seen(g_.vertex_count(), 0);
    std::size_t len = 0;
    Vertex v = tail;
    while (true) {
      if (seen[v]) return;
      seen[v] = 1;
      ++len;
      if (v == root) break;
      Vertex p = s.parent[v];
      if (std::find(g_.neighbors(v).begin(), g_.neighbors(v).end(), p) ==
          g_.neighbors(v).end())
        return;
      v = p;
    }
    if (len >= 3) s.best = std::max(s.best, len);
  }

  void explore(Vertex root, State s, double p,
               std::map<std::size_t, double>& dist) const {
    std::vector<Vertex> cand;
    if (!advance(root, s, cand)) {
      dist[s.best] += p;
      return;
    }
    std::sort(cand.begin(), cand.end());
    double orders = 1.0;
    for (std::size_t k = 2; k <= cand.size(); ++k) orders *= double(k);
    do {
      State next = s;
      push_all(next, cand);
      explore(root, next, p / orders, dist);
    } while (std::next_permutation(cand.begin(), cand.end()));
  }

  const Graph& g_;
};

/// Every cycle reachable from c by one application of an operator, computed
/// by scanning all positions and all replacement tuples. `inserted` is 1 or
/// 2 (vertices added for grow, or replaced for swap); `grow` selects growth
/// versus swap.
inline std::set<std::vector<Vertex>> brute_force_outputs(
    const Graph& g, const std::vector<Vertex>& c, bool grow,
    std::size_t inserted) {
  std::set<std::vector<Vertex>> out;
  const std::size_t L = c.size();
  const std::size_t n = g.vertex_count();
  auto inside = [&](Vertex v) {
    return std::find(c.begin(), c.end(), v) != c.end();
  };
  auto adj = [&](Vertex a, Vertex b) { return g.adjacent(a, b); };
  if (L < 3) return out;
  if (!grow && L < inserted + 2) return out;
  for (std::size_t i = 0; i < L; ++i) {
    Vertex u = c[i];
    Vertex v = grow ? c[(i + 1) % L] : c[(i + inserted + 1) % L];
    for (Vertex a = 0; a < n; ++a) {
      if (inside(a) || !adj(u, a)) continue;
      for (Vertex b = 0; b < n; ++b) {
        if (inserted == 2 && (b == a || inside(b) || !adj(a, b))) continue;
        if (inserted == 1 && b != 0) continue;
        Vertex last = inserted == 1 ? a : b;
        if (!adj(last, v)) continue;
        std::vector<Vertex> next;
        next.push_back(u);
        next.push_back(a);
        if (inserted == 2) next.push_back(b);
        std::size_t skip = grow ? 1 : inserted + 1;
        for (std::size_t k = skip; k < L; ++k) next.push_back(c[(i + k) % L]);
        out.insert(canonical(Cycle{next}).vertices);
      }
    }
  }
  return out;
}

}  // namespace lcycle::testing

#endif  // LCYCLE_TESTS_SUPPORT_HPP
