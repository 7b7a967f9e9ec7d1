#include "lcycle/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lcycle {

namespace {

constexpr std::size_t kBitMatrixMaxVertices = 8192;

}  // namespace

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<std::string> labels) {
  Graph g;
  std::vector<std::pair<Vertex, Vertex>> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::out_of_range("edge endpoint outside vertex range");
    }
    if (u == v) {
      ++g.dropped_self_loops_;
      continue;
    }
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  auto last = std::unique(normalized.begin(), normalized.end());
  g.dropped_duplicates_ =
      static_cast<std::size_t>(std::distance(last, normalized.end()));
  normalized.erase(last, normalized.end());

  g.endpoints_ = std::move(normalized);
  g.adjacency_.assign(n, {});
  g.incident_.assign(n, {});
  for (EdgeId e = 0; e < g.endpoints_.size(); ++e) {
    auto [u, v] = g.endpoints_[e];
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto& inc = g.incident_[v];
    inc.reserve(adj.size());
    for (Vertex w : adj) {
      auto key = std::make_pair(std::min(v, w), std::max(v, w));
      auto it = std::lower_bound(g.endpoints_.begin(), g.endpoints_.end(), key);
      inc.push_back(static_cast<EdgeId>(it - g.endpoints_.begin()));
    }
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  } else if (labels.size() != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  g.labels_ = std::move(labels);

  if (n > 0 && n <= kBitMatrixMaxVertices) {
    g.words_per_row_ = (n + 63) / 64;
    g.bits_.assign(n * g.words_per_row_, 0);
    for (auto [u, v] : g.endpoints_) {
      g.bits_[u * g.words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
      g.bits_[v * g.words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!bits_.empty()) {
    return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
  }
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return kNoEdge;
  return incident_[u][static_cast<std::size_t>(it - adj.begin())];
}

Cycle canonical(Cycle c) {
  auto& vs = c.vertices;
  if (vs.size() < 2) return c;
  auto min_it = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), min_it, vs.end());
  if (vs.size() > 2 && vs.back() < vs[1]) {
    std::reverse(vs.begin() + 1, vs.end());
  }
  return c;
}

bool same_cycle(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return false;
  return canonical(a) == canonical(b);
}

PruneResult prune_leaves(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < 2) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      if (--degree[w] < 2) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }

  PruneResult result;
  std::vector<Vertex> new_id(n, static_cast<Vertex>(-1));
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    new_id[v] = static_cast<Vertex>(result.kept_to_original.size());
    result.kept_to_original.push_back(v);
    labels.push_back(g.label(v));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) {
    if (!removed[u] && !removed[v]) edges.emplace_back(new_id[u], new_id[v]);
  }
  result.pruned = Graph::from_edges(result.kept_to_original.size(), edges,
                                    std::move(labels));
  return result;
}

Cycle to_original(const PruneResult& pr, const Cycle& c) {
  Cycle out;
  out.vertices.reserve(c.length());
  for (Vertex v : c.vertices) out.vertices.push_back(pr.kept_to_original.at(v));
  return out;
}

const char* to_string(CycleViolation v) {
  switch (v) {
    case CycleViolation::none:
      return "ok";
    case CycleViolation::too_short:
      return "too-short";
    case CycleViolation::vertex_out_of_range:
      return "vertex-out-of-range";
    case CycleViolation::duplicate_vertex:
      return "duplicate-vertex";
    case CycleViolation::missing_edge:
      return "missing-edge";
  }
  return "unknown";
}

CycleVerdict validate_cycle(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  if (vs.empty()) return {};
  const std::size_t n = g.vertex_count();
  for (Vertex v : vs) {
    if (v >= n) {
      return {CycleViolation::vertex_out_of_range,
              "vertex " + std::to_string(v) + " not in graph"};
    }
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : vs) {
    if (seen[v]) {
      return {CycleViolation::duplicate_vertex,
              "vertex " + std::to_string(v) + " repeated"};
    }
    seen[v] = 1;
  }
  if (vs.size() < 3) {
    return {CycleViolation::too_short,
            "length " + std::to_string(vs.size()) + " < 3"};
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex u = vs[i];
    Vertex v = vs[(i + 1) % vs.size()];
    if (!g.adjacent(u, v)) {
      return {CycleViolation::missing_edge,
              "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}"};
    }
  }
  return {};
}

}  // namespace lcycle
