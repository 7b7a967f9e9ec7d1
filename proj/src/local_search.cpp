#include "lcycle/local_search.hpp"

#include <stdexcept>

namespace lcycle {

namespace {

// Enumerates moves of one kind; `in_cycle` must flag exactly the vertices of
// c.
void collect_moves(const Graph& g, const std::vector<Vertex>& c,
                   const std::vector<char>& in_cycle, MoveKind kind,
                   std::vector<Move>& out) {
  const std::size_t len = c.size();
  auto at = [&](std::size_t i) { return c[i % len]; };
  switch (kind) {
    case MoveKind::tri_grow:
      if (len < 3) return;
      for (std::size_t i = 0; i < len; ++i) {
        Vertex u = c[i], v = at(i + 1);
        for (Vertex a : g.neighbors(u)) {
          if (!in_cycle[a] && g.adjacent(a, v)) {
            out.push_back({kind, i, a, a});
          }
        }
      }
      return;
    case MoveKind::quad_grow:
      if (len < 3) return;
      for (std::size_t i = 0; i < len; ++i) {
        Vertex u = c[i], v = at(i + 1);
        for (Vertex a : g.neighbors(u)) {
          if (in_cycle[a]) continue;
          for (Vertex b : g.neighbors(a)) {
            if (!in_cycle[b] && g.adjacent(b, v)) {
              out.push_back({kind, i, a, b});
            }
          }
        }
      }
      return;
    case MoveKind::tri_swap:
      if (len < 3) return;
      for (std::size_t i = 0; i < len; ++i) {
        Vertex u = at(i + len - 1), v = at(i + 1);
        for (Vertex a : g.neighbors(u)) {
          if (!in_cycle[a] && g.adjacent(a, v)) {
            out.push_back({kind, i, a, a});
          }
        }
      }
      return;
    case MoveKind::quad_swap:
      if (len < 4) return;
      for (std::size_t i = 0; i < len; ++i) {
        Vertex u = at(i + len - 1), v = at(i + 2);
        for (Vertex a : g.neighbors(u)) {
          if (in_cycle[a]) continue;
          for (Vertex b : g.neighbors(a)) {
            if (!in_cycle[b] && g.adjacent(b, v)) {
              out.push_back({kind, i, a, b});
            }
          }
        }
      }
      return;
  }
}

std::vector<char> membership(const Graph& g, const Cycle& c) {
  std::vector<char> in_cycle(g.vertex_count(), 0);
  for (Vertex v : c.vertices) in_cycle[v] = 1;
  return in_cycle;
}

// Applies m to c in place, keeping in_cycle in sync.
void apply_in_place(std::vector<Vertex>& c, std::vector<char>* in_cycle,
                    const Move& m) {
  const std::size_t len = c.size();
  auto mark = [in_cycle](Vertex v, char on) {
    if (in_cycle != nullptr) (*in_cycle)[v] = on;
  };
  switch (m.kind) {
    case MoveKind::tri_grow:
      c.insert(c.begin() + static_cast<std::ptrdiff_t>(m.pos + 1), m.a);
      mark(m.a, 1);
      return;
    case MoveKind::quad_grow: {
      auto it = c.begin() + static_cast<std::ptrdiff_t>(m.pos + 1);
      it = c.insert(it, m.b);
      c.insert(it, m.a);
      mark(m.a, 1);
      mark(m.b, 1);
      return;
    }
    case MoveKind::tri_swap:
      mark(c[m.pos], 0);
      c[m.pos] = m.a;
      mark(m.a, 1);
      return;
    case MoveKind::quad_swap: {
      std::size_t j = (m.pos + 1) % len;
      mark(c[m.pos], 0);
      mark(c[j], 0);
      c[m.pos] = m.a;
      c[j] = m.b;
      mark(m.a, 1);
      mark(m.b, 1);
      return;
    }
  }
}

std::optional<Cycle> random_application(const Graph& g, const Cycle& c,
                                        MoveKind kind, Rng& rng) {
  auto moves = applicable_moves(g, c, kind);
  if (moves.empty()) return std::nullopt;
  return apply_move(c, moves[uniform_index(rng, moves.size())]);
}

}  // namespace

std::vector<Move> applicable_moves(const Graph& g, const Cycle& c,
                                   MoveKind kind) {
  std::vector<Move> moves;
  if (c.empty()) return moves;
  collect_moves(g, c.vertices, membership(g, c), kind, moves);
  return moves;
}

Cycle apply_move(const Cycle& c, const Move& m) {
  if (m.pos >= c.length()) throw std::out_of_range("move position");
  Cycle out = c;
  apply_in_place(out.vertices, nullptr, m);
  return out;
}

std::optional<Cycle> tri_grow(const Graph& g, const Cycle& c, Rng& rng) {
  return random_application(g, c, MoveKind::tri_grow, rng);
}

std::optional<Cycle> quad_grow(const Graph& g, const Cycle& c, Rng& rng) {
  return random_application(g, c, MoveKind::quad_grow, rng);
}

std::optional<Cycle> tri_swap(const Graph& g, const Cycle& c, Rng& rng) {
  return random_application(g, c, MoveKind::tri_swap, rng);
}

std::optional<Cycle> quad_swap(const Graph& g, const Cycle& c, Rng& rng) {
  return random_application(g, c, MoveKind::quad_swap, rng);
}

const char* to_string(LsVariant v) {
  return v == LsVariant::ls3 ? "LS-III" : "LS-IV";
}

Cycle local_search(const Graph& g, Cycle c, const LsBudget& budget, Rng& rng) {
  if (c.empty()) return c;
  auto in_cycle = membership(g, c);
  std::vector<Move> moves;
  std::size_t stagnant = 0;
  while (true) {
    moves.clear();
    collect_moves(g, c.vertices, in_cycle, MoveKind::tri_grow, moves);
    if (moves.empty()) {
      collect_moves(g, c.vertices, in_cycle, MoveKind::quad_grow, moves);
    }
    if (!moves.empty()) {
      apply_in_place(c.vertices, &in_cycle,
                     moves[uniform_index(rng, moves.size())]);
      stagnant = 0;
      continue;
    }
    if (stagnant >= budget.i_stag) break;
    collect_moves(g, c.vertices, in_cycle, MoveKind::tri_swap, moves);
    if (budget.variant == LsVariant::ls4) {
      collect_moves(g, c.vertices, in_cycle, MoveKind::quad_swap, moves);
    }
    if (moves.empty()) break;
    apply_in_place(c.vertices, &in_cycle,
                   moves[uniform_index(rng, moves.size())]);
    ++stagnant;
  }
  return c;
}

}  // namespace lcycle
