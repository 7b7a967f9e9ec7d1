#ifndef LCYCLE_LOCAL_SEARCH_HPP
#define LCYCLE_LOCAL_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcycle/graph.hpp"
#include "lcycle/random.hpp"

namespace lcycle {

/// Perturbation operators on a cycle c = [c0, ..., c(L-1)].
///
///   tri_grow   edge c[i]-c[i+1]        -> c[i]-a-c[i+1]        (+1)
///   quad_grow  edge c[i]-c[i+1]        -> c[i]-a-b-c[i+1]      (+2)
///   tri_swap   path c[i-1]-c[i]-c[i+1] -> c[i-1]-a-c[i+1]      (=)
///   quad_swap  path c[i-1]-c[i]-c[i+1]-c[i+2]
///                                      -> c[i-1]-a-b-c[i+2]    (=)
///
/// Indices wrap around. Inserted vertices a, b are always outside c.
enum class MoveKind : std::uint8_t { tri_grow, quad_grow, tri_swap, quad_swap };

struct Move {
  MoveKind kind;
  std::size_t pos;  // i in the table above
  Vertex a;
  Vertex b;  // unused by the tri_* operators

  friend bool operator==(const Move&, const Move&) = default;
};

/// Every application of `kind` to c in g. Empty when none applies (including
/// when c is too short for the operator).
std::vector<Move> applicable_moves(const Graph& g, const Cycle& c,
                                   MoveKind kind);

Cycle apply_move(const Cycle& c, const Move& m);

/// Each operator picks one applicable move uniformly at random.
std::optional<Cycle> tri_grow(const Graph& g, const Cycle& c, Rng& rng);
std::optional<Cycle> quad_grow(const Graph& g, const Cycle& c, Rng& rng);
std::optional<Cycle> tri_swap(const Graph& g, const Cycle& c, Rng& rng);
std::optional<Cycle> quad_swap(const Graph& g, const Cycle& c, Rng& rng);

enum class LsVariant : std::uint8_t {
  ls3,  // tri_grow, quad_grow, tri_swap
  ls4,  // all four operators
};

const char* to_string(LsVariant v);

struct LsBudget {
  std::size_t i_stag = 100;
  LsVariant variant = LsVariant::ls3;
};

/// Grows c with the grow operators (tri_grow first) and, when neither
/// applies, walks the plateau with a uniformly chosen swap move (tri_swap,
/// plus quad_swap under ls4). Stops when no operator applies or after
/// budget.i_stag consecutive swap steps. Never shortens the cycle.
Cycle local_search(const Graph& g, Cycle c, const LsBudget& budget, Rng& rng);

}  // namespace lcycle

#endif  // LCYCLE_LOCAL_SEARCH_HPP
