#include <doctest.h>

#include "domgame/errors.hpp"
#include "domgame/families.hpp"
#include "domgame/solver.hpp"
#include "oracles.hpp"

using namespace domgame;

namespace {

FamilyParams params_r(int r) { return {.r = r}; }

}  // namespace

TEST_CASE("tree family examples") {
  CHECK(make_tree_family("caterpillar", {.s = 4, .t = 3}).graph.order() == 12);

  const LabeledGraph t2 = make_tree_family("T", params_r(2));
  CHECK(t2.graph.order() == 11);
  for (const char* role : {"w", "a_1", "b_1", "c_1", "a_2", "b_2", "c_2"}) CHECK(t2.labels.count(role) == 1);
  CHECK(t2.graph.adjacent(t2.at("w"), t2.at("b_1")));
  CHECK(t2.graph.adjacent(t2.at("w"), t2.at("b_2")));

  const LabeledGraph td = make_tree_family("T_dprime", params_r(1));
  CHECK(td.graph.order() == 10);
  CHECK(gamma_pair(td.graph) == std::pair{5, 6});
}

TEST_CASE("tree family order formulas") {
  for (int r = 1; r <= 11; ++r) {
    CHECK(make_tree_t(r).graph.order() == 5 * r + 1);
    CHECK(make_tree_t_prime(r).graph.order() == 5 * r + 3);
    CHECK(make_tree_t_dprime(r).graph.order() == 5 * r + 5);
    for (const auto& g : {make_tree_t(r), make_tree_t_prime(r), make_tree_t_dprime(r)})
      CHECK(graph_stats(g.graph).is_tree);
  }
  for (int s = 2; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t) {
      const auto c = make_caterpillar(s, t);
      CHECK(c.graph.order() == s * t);
      CHECK(graph_stats(c.graph).is_tree);
    }
}

TEST_CASE("small ladder values") {
  CHECK(gamma_pair(make_tree_t(1).graph) == std::pair{3, 4});
  CHECK(gamma_pair(make_tree_t_prime(1).graph) == std::pair{4, 5});
  CHECK(gamma_pair(make_caterpillar(3, 2).graph).first == 3);
}

TEST_CASE("family parameter errors") {
  CHECK_THROWS_AS(make_tree_family("T", {}), ContractError);
  CHECK_THROWS_AS(make_tree_family("T", params_r(0)), ContractError);
  CHECK_THROWS_AS(make_tree_family("caterpillar", {.s = 1, .t = 3}), ContractError);
  CHECK_THROWS_AS(make_tree_family("nope", params_r(1)), ContractError);
  CHECK_THROWS_AS(make_tree_t(13), ContractError);  // 66 vertices
  CHECK_THROWS_AS(make_spanning_pair("houses", {.t = 0}), ContractError);
  CHECK_THROWS_AS(make_spanning_pair("layered3conn", {.m = 2}), ContractError);
  CHECK_THROWS_AS(make_spanning_pair("starclique", {.m = 1, .n = 3}), ContractError);
  CHECK_THROWS_AS(make_spanning_pair("starclique", {.m = 2, .n = 2}), ContractError);
  CHECK_THROWS_AS(make_spanning_pair("web", {.k = 0}), ContractError);
  CHECK_THROWS_AS(make_spanning_pair("nope", {}), ContractError);
  CHECK_THROWS_AS(make_tree_t(1).at("zz"), ContractError);
  CHECK(is_tree_family("T_prime"));
  CHECK_FALSE(is_tree_family("web"));
  CHECK(is_spanning_family("web"));
}

TEST_CASE("fig6 pair") {
  const auto [g, t] = make_spanning_pair("fig6", {});
  CHECK(g.graph.order() == 8);
  CHECK(g.graph.size() == 10);
  // 1-indexed drawing edges 12 23 24 26 56 67 78
  const std::vector<Edge> want{{0, 1}, {1, 2}, {1, 3}, {1, 5}, {4, 5}, {5, 6}, {6, 7}};
  CHECK(t.graph.edges() == want);
  CHECK(t.at("1") == 0);
  CHECK(t.at("8") == 7);
}

TEST_CASE("spanning pair order formulas and containment") {
  for (int t = 1; t <= 6; ++t) {
    auto [g, h] = make_spanning_pair("houses", {.t = t});
    CHECK(g.graph.order() == 4 * t + 1);
    CHECK(is_spanning_subgraph(h.graph, g.graph));
    CHECK(h.graph.is_connected());
  }
  for (int m = 3; m <= 6; ++m) {
    auto [g, h] = make_spanning_pair("layered3conn", {.m = m});
    CHECK(g.graph.order() == m * (m + 2));
    CHECK(is_spanning_subgraph(h.graph, g.graph));
  }
  CHECK(make_spanning_pair("layered3conn", {.m = 4}).first.graph.order() == 24);
  for (int m = 2; m <= 5; ++m)
    for (int n = 3; n <= 5; ++n) {
      auto [g, h] = make_spanning_pair("starclique", {.m = m, .n = n});
      CHECK(g.graph.order() == n * m + 1);
      CHECK(g.graph == h.graph);
    }
  for (int k = 1; k <= 4; ++k) {
    auto [g, t] = make_spanning_pair("web", {.k = k});
    CHECK(g.graph.order() == 10 * k + 2);
    CHECK(t.graph.order() == 10 * k + 2);
    CHECK(graph_stats(t.graph).is_tree);
    CHECK(is_spanning_subgraph(t.graph, g.graph));
  }
  auto [fg, ft] = make_spanning_pair("fig6", {});
  CHECK(graph_stats(ft.graph).is_tree);
  CHECK(is_spanning_subgraph(ft.graph, fg.graph));
}

TEST_CASE("layered3conn connectivity at m = 3") {
  auto [g, h] = make_spanning_pair("layered3conn", {.m = 3});
  CHECK(oracle::is_k_connected(g.graph, 3));
  CHECK(oracle::is_k_connected(h.graph, 2));
}

TEST_CASE("generators are deterministic") {
  for (const char* name : {"houses", "web", "layered3conn"}) {
    FamilyParams p{.t = 3, .m = 3, .k = 2};
    auto a = make_spanning_pair(name, p), b = make_spanning_pair(name, p);
    CHECK(a.first.graph.edges() == b.first.graph.edges());
    CHECK(a.second.labels == b.second.labels);
  }
  CHECK(make_tree_t_dprime(3).labels == make_tree_t_dprime(3).labels);
}

TEST_CASE("partial fixtures") {
  const auto p3 = make_partial_fixture("P3'");
  CHECK(game_value(p3.state).value == 1);
  CHECK(game_value(DominationState(p3.state.graph, p3.state.dominated, Mover::Staller)).value == 2);

  const auto p5 = make_partial_fixture("P5'");
  for (Mover m : {Mover::Dominator, Mover::Staller})
    CHECK(game_value(DominationState(p5.state.graph, p5.state.dominated, m)).value == 3);

  const auto f = make_partial_fixture("F");
  CHECK(f.state.graph.order() == 9);
  CHECK(graph_stats(f.state.graph).is_tree);
  CHECK(f.state.dominated == VertexSet{f.labels.at("b_1")});
  CHECK(game_value(f.state).value == 5);
  CHECK(game_value(DominationState(f.state.graph, f.state.dominated, Mover::Staller)).value == 5);

  CHECK_THROWS_AS(make_partial_fixture("Q"), ContractError);
}
