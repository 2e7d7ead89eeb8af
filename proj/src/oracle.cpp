#include <algorithm>

#include "domgame/solver.hpp"

namespace domgame {

namespace {

int brute_force(const Graph& g, VertexSet dominated, Mover mover) {
  const VertexSet all = g.vertices();
  if (dominated == all) return 0;
  int best = mover == Mover::Dominator ? g.order() + 1 : -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet after = dominated | g.closed_neighborhood(v);
    if (after == dominated) continue;
    const int value = 1 + brute_force(g, after, other(mover));
    best = mover == Mover::Dominator ? std::min(best, value) : std::max(best, value);
  }
  return best;
}

}  // namespace

int oracle_value(const DominationState& state) {
  return brute_force(state.graph, state.dominated, state.mover);
}

}  // namespace domgame
