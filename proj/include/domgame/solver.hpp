#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domgame/state.hpp"

namespace domgame {

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t max_table_size = 0;
};

struct SolveResult {
  int value = 0;  // moves remaining under optimal play
  VertexSet optimal_first_moves;
  SearchStats stats;
};

struct MoveRecord {
  Mover player;
  Vertex vertex;
  int newly_dominated;
};
using MoveTrace = std::vector<MoveRecord>;

struct SolverOptions {
  bool prune = true;         // Continuation Principle move pruning
  bool bounds = true;        // cutoffs at the safe bound pair
  bool exact_front = false;  // optimal_first_moves over the unpruned move list
  std::size_t memo_cap = 0;  // 0 = unbounded; exceeding it throws ResourceGuardError
};

/// Vertices whose move dominates at least one new vertex, ascending.
std::vector<Vertex> legal_moves(const DominationState& state);

/// Drops moves whose newly dominated set is beaten by another move under the
/// Continuation Principle: for Dominator a move is dropped when another
/// kept move covers its gain (ties keep the lowest index); Staller dually.
std::vector<Vertex> prune_dominated_moves(const DominationState& state,
                                          std::span<const Vertex> moves);

/// Memoized minimax on one fixed graph. The table is keyed on
/// (dominated set, mover) and persists across calls, so evaluating many
/// starts on the same graph shares work.
class GameSolver {
public:
  explicit GameSolver(Graph g, SolverOptions options = {});
  ~GameSolver();
  GameSolver(GameSolver&&) noexcept;
  GameSolver& operator=(GameSolver&&) noexcept;

  const Graph& graph() const;
  const SolverOptions& options() const;

  /// Exact number of remaining moves.
  int value(VertexSet dominated, Mover mover);

  /// Value plus the optimal first moves and cumulative search statistics.
  SolveResult solve(VertexSet dominated, Mover mover);

  /// One optimal played-out game, lowest index among co-optimal moves.
  MoveTrace optimal_line(VertexSet dominated, Mover mover);

  SearchStats stats() const;
  std::size_t table_size() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SolveResult game_value(const DominationState& state, const SolverOptions& options = {});

/// (gamma_g, gamma_g') on the undominated graph.
std::pair<int, int> gamma_pair(const Graph& g, const SolverOptions& options = {});

/// Root moves evaluated on `workers` threads, each branch with its own table.
int root_split_value(const DominationState& state, int workers,
                     const SolverOptions& options = {});

/// Plain recursive minimax: no memo, no pruning, no bounds. Exponential;
/// intended for graphs with at most about 12 vertices.
int oracle_value(const DominationState& state);

/// A leaf of the residual forest; its move newly dominates at most two
/// vertices. Throws ContractError unless the graph is a forest with an
/// undominated vertex.
Vertex staller_cheap_move(const DominationState& state);

struct InvariantReport {
  int gamma = 0;
  int game = 0;          // gamma_g
  int staller_game = 0;  // gamma_g'
  bool bound_chain = false;      // gamma <= gamma_g <= 2 gamma - 1
  bool start_gap = false;        // |gamma_g - gamma_g'| <= 1
  bool continuation = false;     // monotone over all sampled B subset of A
  int continuation_samples = 0;
  std::vector<std::string> failures;

  bool ok() const { return bound_chain && start_gap && continuation; }
};

InvariantReport verify_invariants(const Graph& g, int samples, std::uint64_t seed);

}  // namespace domgame
