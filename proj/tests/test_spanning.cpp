#include <doctest.h>

#include <set>

#include "domgame/errors.hpp"
#include "domgame/families.hpp"
#include "domgame/spanning.hpp"
#include "domgame/trees.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace domgame;
using namespace fixtures;

TEST_CASE("spanning tree counts") {
  CHECK(spanning_trees(make_tree_t(2).graph).size() == 1);
  CHECK(spanning_trees(complete(4)).size() == 16);
  CHECK(spanning_trees(make_spanning_pair("starclique", {.m = 2, .n = 3}).first.graph).size() == 9);
  CHECK(spanning_trees(cycle(7)).size() == 7);
  CHECK(spanning_trees(complete(6)).size() == 1296);
  CHECK(spanning_trees(Graph(1, {})).size() == 1);
}

TEST_CASE("spanning trees are distinct trees matching the brute count") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Graph g = oracle::random_graph(rng, n, 0.6);
    if (!g.is_connected()) continue;
    std::set<std::vector<Edge>> seen;
    const auto count = enumerate_spanning_trees(g, [&](std::span<const Edge> es) {
      std::vector<Edge> tree(es.begin(), es.end());
      CHECK(std::is_sorted(tree.begin(), tree.end()));
      const Graph t(n, tree);
      CHECK(graph_stats(t).is_tree);
      CHECK(is_spanning_subgraph(t, g));
      CHECK(seen.insert(tree).second);
    });
    CHECK(count == oracle::count_spanning_trees(g));
  }
}

TEST_CASE("spanning enumeration errors") {
  CHECK_THROWS_AS(spanning_trees(Graph(4, {{0, 1}, {2, 3}})), ContractError);
  CHECK_THROWS_AS(spanning_trees(Graph(25, {})), ContractError);
  CHECK_THROWS_AS(spanning_trees(complete(6), 100), ResourceGuardError);
  CHECK(spanning_trees(complete(6), 1296).size() == 1296);
}

TEST_CASE("fig6 extremes") {
  const auto [g, t] = make_spanning_pair("fig6", {});
  const SpanningReport r = spanning_extremes(g.graph);
  CHECK(r.game == 4);
  CHECK(r.min_tree.value == 3);
  CHECK(r.min_tree.value < r.game);
  CHECK(gamma_pair(t.graph).first == r.min_tree.value);
  CHECK(r.prop5_ok);
  CHECK(r.gamma_preserving_tree_exists);
  CHECK(r.min_tree.count >= 1);
  // witness is the lexicographically smallest minimizing tree
  std::vector<std::vector<Edge>> minimizers;
  for (auto& tree : spanning_trees(g.graph))
    if (gamma_pair(Graph(8, tree)).first == 3) minimizers.push_back(tree);
  CHECK(minimizers.size() == r.min_tree.count);
  CHECK(r.min_tree.witness == *std::min_element(minimizers.begin(), minimizers.end()));
}

TEST_CASE("starclique extremes") {
  const auto g = make_spanning_pair("starclique", {.m = 4, .n = 3}).first.graph;
  const SpanningReport r = spanning_extremes(g);
  CHECK(r.tree_count == 81);
  CHECK(r.game == 5);
  CHECK(r.min_tree.value >= 6);
}

TEST_CASE("a tree is its own only spanning tree") {
  const Graph t = make_tree_t_prime(1).graph;
  const SpanningReport r = spanning_extremes(t);
  CHECK(r.tree_count == 1);
  CHECK(r.min_tree.value == r.game);
  CHECK(r.max_tree.value == r.game);
  CHECK(r.prop5_ok);
}

TEST_CASE("extremes do not depend on workers or the cache") {
  const Graph g = make_spanning_pair("houses", {.t = 2}).first.graph;
  SpanningOptions one, four;
  four.workers = 4;
  TreeValueCache cache;
  const SpanningReport a = spanning_extremes(g, one);
  const SpanningReport b = spanning_extremes(g, four);
  const SpanningReport c = spanning_extremes(g, one, &cache);
  for (const SpanningReport* r : {&b, &c}) {
    CHECK(r->tree_count == a.tree_count);
    CHECK(r->min_tree.value == a.min_tree.value);
    CHECK(r->min_tree.witness == a.min_tree.witness);
    CHECK(r->min_tree.count == a.min_tree.count);
    CHECK(r->max_tree.witness == a.max_tree.witness);
  }
  CHECK(cache.size() > 0);
}

TEST_CASE("spanning tree floor over small connected graphs") {
  TreeValueCache cache;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const SpanningReport r = spanning_extremes(g, {}, &cache);
      CHECK(r.prop5_ok);
      CHECK(2 * r.min_tree.value >= r.game + 1);
      CHECK(r.min_tree_gamma >= r.gamma);
    }
}

TEST_CASE("containment clauses") {
  // gamma_g(K_{1,4}) = gamma = 1, so every spanning subgraph is at least as slow
  const Graph s = star(4);
  const Prop9Report r = verify_prop9(s, s);
  CHECK(r.clause_i == ClauseStatus::Holds);
  CHECK(r.ok());

  Graph k4 = complete(4);
  const Prop9Report p = verify_prop9(k4, path(4));
  CHECK(p.game_g == 1);
  CHECK(p.clause_i == ClauseStatus::Holds);

  // statuses follow the hypotheses exactly
  std::mt19937_64 rng(42);
  for (int i = 0; i < 80; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.6);
    std::vector<Edge> kept;
    for (auto e : g.edges())
      if (rng() % 3) kept.push_back(e);
    const Graph h(g.order(), kept);
    const Prop9Report q = verify_prop9(g, h);
    if (q.game_g != q.gamma_g)
      CHECK(q.clause_i == ClauseStatus::NotApplicable);
    else
      CHECK(q.clause_i == (q.game_h >= q.game_g ? ClauseStatus::Holds : ClauseStatus::Violated));
    if (q.game_g != 2 * q.gamma_g - 1 || q.gamma_h != q.gamma_g)
      CHECK(q.clause_ii == ClauseStatus::NotApplicable);
    else
      CHECK(q.clause_ii == (q.game_h <= q.game_g ? ClauseStatus::Holds : ClauseStatus::Violated));
    CHECK(q.clause_i != ClauseStatus::Violated);
    CHECK(q.clause_ii != ClauseStatus::Violated);
  }

  const auto [g6, t6] = make_spanning_pair("fig6", {});
  const Prop9Report f = verify_prop9(g6.graph, t6.graph);
  REQUIRE(f.gamma_preserving_tree.has_value());
  CHECK(*f.gamma_preserving_tree);
  CHECK(f.gamma_g == 3);
  CHECK(f.gamma_h == 3);

  CHECK_THROWS_AS(verify_prop9(path(4), complete(4)), ContractError);
  CHECK(std::string(to_string(ClauseStatus::NotApplicable)) == "not_applicable");
}
