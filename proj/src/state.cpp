#include "domgame/state.hpp"

#include "domgame/errors.hpp"

namespace domgame {

DominationState::DominationState(Graph g, VertexSet d, Mover m)
    : graph(std::move(g)), dominated(d), mover(m) {
  if (!dominated.subset_of(graph.vertices()))
    throw ContractError("dominated set exceeds the vertex set");
}

VertexSet DominationState::saturated() const {
  VertexSet out;
  for (Vertex v = 0; v < graph.order(); ++v)
    if (graph.closed_neighborhood(v).subset_of(dominated)) out.insert(v);
  return out;
}

ResidualGraph residual(const DominationState& state) {
  const VertexSet keep = state.graph.vertices() - state.saturated();
  std::vector<Vertex> back = keep.to_vector();
  std::vector<Vertex> map(state.graph.order(), -1);
  for (std::size_t i = 0; i < back.size(); ++i) map[back[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  VertexSet marked;
  for (auto [u, v] : state.graph.edges()) {
    if (map[u] < 0 || map[v] < 0) continue;
    if (state.dominated.contains(u) && state.dominated.contains(v)) continue;
    edges.emplace_back(map[u], map[v]);
  }
  for (Vertex v : keep & state.dominated) marked.insert(map[v]);
  return {Graph(static_cast<int>(back.size()), edges), marked, std::move(back)};
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw ContractError("vertex " + std::to_string(v) + " out of range");
  return g.closed_neighborhood(v);
}

}  // namespace domgame
