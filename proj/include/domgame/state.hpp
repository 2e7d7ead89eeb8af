#pragma once

#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// A partially dominated graph together with the player to move.
struct DominationState {
  Graph graph;
  VertexSet dominated;
  Mover mover = Mover::Dominator;

  DominationState() = default;
  DominationState(Graph g, VertexSet d = {}, Mover m = Mover::Dominator);

  VertexSet undominated() const { return graph.vertices() - dominated; }
  bool finished() const { return undominated().empty(); }
  /// Vertices of N[v] that a move at v would newly dominate.
  VertexSet gain(Vertex v) const { return graph.closed_neighborhood(v) - dominated; }
  /// Vertices whose closed neighborhood is entirely dominated.
  VertexSet saturated() const;
};

/// Residual graph: saturated vertices and dominated-dominated edges removed,
/// dominated-but-unsaturated vertices kept and marked.
struct ResidualGraph {
  Graph graph;
  VertexSet dominated;
  std::vector<Vertex> origin;  // residual vertex -> original vertex

  DominationState as_state(Mover m) const { return {graph, dominated, m}; }
};

ResidualGraph residual(const DominationState& state);

/// Checked N[v]; throws ContractError when v is out of range.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

}  // namespace domgame
