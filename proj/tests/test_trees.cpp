#include <doctest.h>

#include <set>

#include "domgame/errors.hpp"
#include "domgame/trees.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace domgame;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), es);
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("free tree counts") {
  const std::uint64_t known[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320};
  for (int n = 1; n <= 16; ++n) {
    std::uint64_t count = 0;
    enumerate_trees(n, [&](const Graph& t) {
      ++count;
      CHECK(t.order() == n);
      CHECK(graph_stats(t).is_tree);
    });
    CHECK(count == known[n - 1]);
  }
}

TEST_CASE("free trees match the labeled-tree oracle up to order 9") {
  for (int n = 1; n <= 9; ++n) {
    std::set<std::string> ours;
    for (const Graph& t : enumerate_trees(n)) CHECK(ours.insert(oracle::tree_code(t)).second);
    std::set<std::string> want;
    for (const Graph& t : oracle::pruefer_free_trees(n)) want.insert(oracle::tree_code(t));
    CHECK(ours == want);
  }
}

TEST_CASE("tree enumeration range") {
  CHECK_THROWS_AS(enumerate_trees(0), ContractError);
  CHECK_THROWS_AS(enumerate_trees(21), ContractError);
}

TEST_CASE("level sequences") {
  CHECK(rooted_level_sequences(1).size() == 1);
  CHECK(rooted_level_sequences(4).size() == 4);
  CHECK(rooted_level_sequences(7).size() == 48);
  CHECK(tree_from_levels({0, 1, 2, 1}).edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
}

TEST_CASE("canonical form is a complete invariant on small graphs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const Graph h = relabel(g, random_perm(rng, n));
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_form(g).size() == g.size());
  }
  for (int n = 1; n <= 11; ++n) {
    std::set<std::uint64_t> codes;
    for (const Graph& t : enumerate_trees(n)) CHECK(codes.insert(canonical_code(t)).second);
  }
  // pairs that fool plain degree refinement: C6 vs two triangles
  CHECK(canonical_code(fixtures::cycle(6)) !=
        canonical_code(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST_CASE("connected graph counts") {
  const std::size_t known[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == known[n - 1]);
}

TEST_CASE("connected graphs match brute-force classes up to order 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> ours;
    for (const Graph& g : connected_graphs(n)) {
      CHECK(g.is_connected());
      ours.insert(oracle::brute_canonical(g));
    }
    CHECK(ours.size() == connected_graphs(n).size());
    CHECK(ours == oracle::connected_classes(n));
  }
}
