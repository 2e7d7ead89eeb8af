#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// One representative per isomorphism class of free trees of order n
/// (1 <= n <= 20), in a fixed deterministic order.
///
/// Unicentroidal trees come from canonical level sequences rooted at the
/// centroid with every branch smaller than n/2; bicentroidal trees (n even)
/// join the roots of an unordered pair of rooted trees of order n/2.
void enumerate_trees(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_trees(int n);

/// Canonical level sequences of rooted trees of order m (root at level 0),
/// in decreasing lexicographic order.
std::vector<std::vector<int>> rooted_level_sequences(int m);

/// Graph of a level sequence: vertex i is attached to the nearest earlier
/// vertex one level up.
Graph tree_from_levels(const std::vector<int>& levels);

/// Smallest-code relabeling under isomorphism for graphs with n <= 11.
/// Vertices are ordered by iterated degree refinement, then every
/// class-respecting arrangement is tried (true twins are not permuted).
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

/// All connected graphs of order n (1 <= n <= 8) up to isomorphism, each in
/// canonical form, sorted by canonical code.
std::vector<Graph> connected_graphs(int n);

}  // namespace domgame
