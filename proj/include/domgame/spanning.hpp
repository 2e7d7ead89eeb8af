#pragma once

#include <absl/container/flat_hash_map.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "domgame/graph.hpp"
#include "domgame/solver.hpp"

namespace domgame {

inline constexpr std::uint64_t kDefaultTreeCap = 100000;

/// Visits every spanning tree exactly once as a sorted edge list, by
/// include/exclude recursion over the edges: an edge is included only if it
/// joins two components of the partial forest and excluded only if the
/// remaining graph stays connected. Returns the tree count.
///
/// Throws ContractError for disconnected input or n > 24, and
/// ResourceGuardError once more than `cap` trees are found.
std::uint64_t enumerate_spanning_trees(const Graph& g,
                                       const std::function<void(std::span<const Edge>)>& visit,
                                       std::uint64_t cap = kDefaultTreeCap);

std::vector<std::vector<Edge>> spanning_trees(const Graph& g, std::uint64_t cap = kDefaultTreeCap);

struct TreeExtreme {
  int value = 0;
  std::vector<Edge> witness;  // lexicographically smallest achieving tree
  std::uint64_t count = 0;    // trees achieving the value
};

struct SpanningReport {
  int gamma = 0;
  int game = 0;
  int staller_game = 0;
  std::uint64_t tree_count = 0;
  TreeExtreme min_tree;
  TreeExtreme max_tree;
  int min_tree_gamma = 0;  // smallest gamma over the spanning trees
  bool prop5_ok = false;  // every tree has gamma_g >= ceil((gamma_g(G) + 1) / 2)
  bool gamma_preserving_tree_exists = false;
};

struct SpanningOptions {
  std::uint64_t cap = kDefaultTreeCap;
  int workers = 1;
  SolverOptions solver;
};

/// Caches gamma_g of labeled trees across calls (n <= 11), keyed by the
/// adjacency code. Not thread-safe; used by sequential property sweeps.
class TreeValueCache {
public:
  std::optional<int> find(const Graph& t) const;
  void store(const Graph& t, int value);
  std::size_t size() const { return values_.size(); }
private:
  absl::flat_hash_map<std::uint64_t, int> values_;
};

SpanningReport spanning_extremes(const Graph& g, const SpanningOptions& options = {},
                                 TreeValueCache* cache = nullptr);

enum class ClauseStatus { NotApplicable, Holds, Violated };
const char* to_string(ClauseStatus s);

struct Prop9Report {
  int gamma_g = 0;       // gamma(G)
  int game_g = 0;        // gamma_g(G)
  int gamma_h = 0;
  int game_h = 0;
  ClauseStatus clause_i = ClauseStatus::NotApplicable;   // gamma_g(G) = gamma(G) => gamma_g(H) >= gamma_g(G)
  ClauseStatus clause_ii = ClauseStatus::NotApplicable;  // gamma_g(G) = 2 gamma(G) - 1, gamma(H) = gamma(G) => gamma_g(H) <= gamma_g(G)
  std::optional<bool> gamma_preserving_tree;            // evaluated when n <= 12 and G connected

  bool ok() const {
    return clause_i != ClauseStatus::Violated && clause_ii != ClauseStatus::Violated &&
           gamma_preserving_tree.value_or(true);
  }
};

/// Throws ContractError when H is not a spanning subgraph of G.
Prop9Report verify_prop9(const Graph& g, const Graph& h, std::uint64_t cap = kDefaultTreeCap);

}  // namespace domgame
