#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "domgame/state.hpp"

namespace domgame {

/// A generated family member with named role vertices.
struct LabeledGraph {
  Graph graph;
  std::map<std::string, Vertex> labels;
  std::string family;
  std::map<std::string, int> params;

  Vertex at(const std::string& role) const;
};

struct FamilyParams {
  std::optional<int> r, s, t, m, n, k;
};

/// caterpillar(s, t), T(r), T_prime(r), T_dprime(r).
/// Throws ContractError on unknown names or out-of-range parameters.
LabeledGraph make_tree_family(const std::string& name, const FamilyParams& params);

LabeledGraph make_caterpillar(int s, int t);
LabeledGraph make_tree_t(int r);
LabeledGraph make_tree_t_prime(int r);
LabeledGraph make_tree_t_dprime(int r);

/// (G, H) with H a spanning subgraph of G: houses(t), layered3conn(m),
/// starclique(m, n) (returned as (G, G)), web(k), fig6.
std::pair<LabeledGraph, LabeledGraph> make_spanning_pair(const std::string& name,
                                                         const FamilyParams& params);

struct PartialFixture {
  DominationState state;
  std::string name;
  std::map<std::string, Vertex> labels;
};

/// "P3'" (one leaf dominated), "P5'" (center dominated), "F" (the order-9
/// branch of T''(1) at b_1, with b_1 dominated).
PartialFixture make_partial_fixture(const std::string& name);

/// True for names accepted by make_tree_family.
bool is_tree_family(const std::string& name);
bool is_spanning_family(const std::string& name);

}  // namespace domgame
