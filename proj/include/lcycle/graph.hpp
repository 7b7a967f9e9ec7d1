#ifndef LCYCLE_GRAPH_HPP
#define LCYCLE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lcycle {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Immutable simple undirected graph.
///
/// Vertices are dense ids in [0, n). Every vertex carries a label (the id it
/// had in the source file) so results can be reported in original terms.
/// Adjacency lists are sorted; each undirected edge has a dense id in
/// [0, edge_count) shared by both of its arcs.
class Graph {
 public:
  Graph() = default;

  /// Builds the simple graph on `n` vertices from an arbitrary edge list.
  /// Self-loops and repeated pairs are dropped; counts of each are available
  /// through dropped_self_loops() / dropped_duplicates().
  /// Throws std::out_of_range if an endpoint is >= n.
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<Vertex, Vertex>> edges,
                          std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return endpoints_.size(); }
  bool empty() const { return adjacency_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return incident_[v];
  }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const;
  /// Dense id of edge {u, v}, or kNoEdge.
  EdgeId edge_id(Vertex u, Vertex v) const;
  /// Endpoints of edge e with first < second.
  std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return endpoints_[e]; }
  std::span<const std::pair<Vertex, Vertex>> edges() const {
    return endpoints_;
  }

  const std::string& label(Vertex v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }

  std::size_t dropped_self_loops() const { return dropped_self_loops_; }
  std::size_t dropped_duplicates() const { return dropped_duplicates_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::pair<Vertex, Vertex>> endpoints_;
  std::vector<std::string> labels_;
  // Row-major n*n bit matrix, only built for graphs small enough to afford
  // it; adjacent() falls back to binary search otherwise.
  std::vector<std::uint64_t> bits_;
  std::size_t words_per_row_ = 0;
  std::size_t dropped_self_loops_ = 0;
  std::size_t dropped_duplicates_ = 0;
};

/// Closed simple cycle: consecutive vertices are adjacent and the last vertex
/// connects back to the first. An empty vertex list means "no cycle".
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Same cycle up to rotation and reversal.
bool same_cycle(const Cycle& a, const Cycle& b);

/// Rotates and orients a cycle so it starts at its smallest vertex and its
/// second vertex is the smaller of the two neighbours of that vertex.
Cycle canonical(Cycle c);

struct PruneResult {
  Graph pruned;
  std::vector<Vertex> kept_to_original;
};

/// Iteratively strips vertices of degree < 2 (the 2-core). Labels of kept
/// vertices are preserved.
PruneResult prune_leaves(const Graph& g);

/// Maps a cycle of the pruned graph back to the original vertex ids.
Cycle to_original(const PruneResult& pr, const Cycle& c);

enum class CycleViolation {
  none,
  too_short,
  vertex_out_of_range,
  duplicate_vertex,
  missing_edge,
};

const char* to_string(CycleViolation v);

struct CycleVerdict {
  CycleViolation violation = CycleViolation::none;
  std::string detail;

  bool ok() const { return violation == CycleViolation::none; }
  explicit operator bool() const { return ok(); }
};

/// Checks c against g and reports the first violated cycle invariant.
/// The empty cycle is valid ("no cycle found").
CycleVerdict validate_cycle(const Graph& g, const Cycle& c);

}  // namespace lcycle

#endif  // LCYCLE_GRAPH_HPP
