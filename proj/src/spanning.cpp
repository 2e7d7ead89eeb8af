#include "domgame/spanning.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "domgame/errors.hpp"
#include "domgame/solver.hpp"
#include "parallel.hpp"

namespace domgame {

namespace {

VertexSet reach(const std::vector<VertexSet>& adj, Vertex from) {
  VertexSet seen = VertexSet::single(from), frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= adj[v];
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

struct TreeSearch {
  int n;
  std::vector<Edge> edges;
  const std::function<void(std::span<const Edge>)>& visit;
  std::uint64_t cap;
  std::vector<VertexSet> allowed;  // adjacency of edges not yet excluded
  std::vector<VertexSet> forest;   // adjacency of included edges
  std::vector<Edge> chosen;
  std::uint64_t found = 0;

  void run(std::size_t i) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (++found > cap)
        throw ResourceGuardError("spanning tree count exceeds cap of " + std::to_string(cap));
      visit(chosen);
      return;
    }
    if (i == edges.size()) return;
    const auto [u, v] = edges[i];

    if (!reach(forest, u).contains(v)) {
      forest[u].insert(v);
      forest[v].insert(u);
      chosen.push_back(edges[i]);
      run(i + 1);
      chosen.pop_back();
      forest[u].erase(v);
      forest[v].erase(u);
    }

    allowed[u].erase(v);
    allowed[v].erase(u);
    if (reach(allowed, 0) == VertexSet::full(n)) run(i + 1);
    allowed[u].insert(v);
    allowed[v].insert(u);
  }
};

std::uint64_t tree_key(const Graph& t) {
  std::uint64_t code = 0;
  for (auto [u, v] : t.edges()) code |= std::uint64_t{1} << (v * (v - 1) / 2 + u);
  return code | (static_cast<std::uint64_t>(t.order()) << 56);
}

}  // namespace

std::uint64_t enumerate_spanning_trees(const Graph& g,
                                       const std::function<void(std::span<const Edge>)>& visit,
                                       std::uint64_t cap) {
  if (g.order() > 24) throw ContractError("spanning tree enumeration supports n <= 24");
  if (!g.is_connected()) throw ContractError("spanning trees need a connected graph");
  TreeSearch s{g.order(), g.edges(), visit, cap, {}, std::vector<VertexSet>(g.order()), {}};
  for (Vertex v = 0; v < g.order(); ++v) s.allowed.push_back(g.neighbors(v));
  s.run(0);
  return s.found;
}

std::vector<std::vector<Edge>> spanning_trees(const Graph& g, std::uint64_t cap) {
  std::vector<std::vector<Edge>> out;
  enumerate_spanning_trees(g, [&](std::span<const Edge> t) { out.emplace_back(t.begin(), t.end()); },
                           cap);
  return out;
}

std::optional<int> TreeValueCache::find(const Graph& t) const {
  if (t.order() > 11) return std::nullopt;
  auto it = values_.find(tree_key(t));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void TreeValueCache::store(const Graph& t, int value) {
  if (t.order() <= 11) values_.emplace(tree_key(t), value);
}

SpanningReport spanning_extremes(const Graph& g, const SpanningOptions& options,
                                 TreeValueCache* cache) {
  SpanningReport rep;
  const auto trees = spanning_trees(g, options.cap);
  rep.tree_count = trees.size();
  rep.gamma = domination_number(g);
  std::tie(rep.game, rep.staller_game) = gamma_pair(g, options.solver);

  std::vector<int> value(trees.size());
  std::vector<int> tree_gamma(trees.size());
  auto solve_one = [&](std::size_t i) {
    const Graph t(g.order(), trees[i]);
    tree_gamma[i] = domination_number(t);
    if (cache) {
      if (auto hit = cache->find(t)) {
        value[i] = *hit;
        return;
      }
    }
    GameSolver solver(t, options.solver);
    value[i] = solver.value({}, Mover::Dominator);
    if (cache) cache->store(t, value[i]);
  };
  detail::parallel_for(trees.size(), cache ? 1 : options.workers, solve_one);

  // Deterministic reduce: trees arrive in enumeration order; ties go to the
  // lexicographically smallest edge list.
  const int prop5_floor = (rep.game + 2) / 2;
  rep.prop5_ok = true;
  rep.min_tree_gamma = std::numeric_limits<int>::max();
  rep.min_tree.value = std::numeric_limits<int>::max();
  rep.max_tree.value = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const int v = value[i];
    if (v < prop5_floor) rep.prop5_ok = false;
    if (tree_gamma[i] == rep.gamma) rep.gamma_preserving_tree_exists = true;
    rep.min_tree_gamma = std::min(rep.min_tree_gamma, tree_gamma[i]);
    for (auto* ext : {&rep.min_tree, &rep.max_tree}) {
      const bool better = ext == &rep.min_tree ? v < ext->value : v > ext->value;
      if (better) {
        ext->value = v;
        ext->witness = trees[i];
        ext->count = 1;
      } else if (v == ext->value) {
        ++ext->count;
        if (trees[i] < ext->witness) ext->witness = trees[i];
      }
    }
  }
  return rep;
}

const char* to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Holds: return "holds";
    case ClauseStatus::Violated: return "violated";
    default: return "not_applicable";
  }
}

Prop9Report verify_prop9(const Graph& g, const Graph& h, std::uint64_t cap) {
  if (!is_spanning_subgraph(h, g)) throw ContractError("H is not a spanning subgraph of G");
  Prop9Report rep;
  rep.gamma_g = domination_number(g);
  rep.gamma_h = domination_number(h);
  rep.game_g = GameSolver(g).value({}, Mover::Dominator);
  rep.game_h = GameSolver(h).value({}, Mover::Dominator);

  if (rep.game_g == rep.gamma_g)
    rep.clause_i = rep.game_h >= rep.game_g ? ClauseStatus::Holds : ClauseStatus::Violated;
  if (rep.game_g == 2 * rep.gamma_g - 1 && rep.gamma_h == rep.gamma_g)
    rep.clause_ii = rep.game_h <= rep.game_g ? ClauseStatus::Holds : ClauseStatus::Violated;

  if (g.order() <= 12 && g.is_connected()) {
    bool found = false;
    enumerate_spanning_trees(
        g,
        [&](std::span<const Edge> t) {
          if (!found && domination_number(Graph(g.order(), t)) == rep.gamma_g) found = true;
        },
        cap);
    rep.gamma_preserving_tree = found;
  }
  return rep;
}

}  // namespace domgame
