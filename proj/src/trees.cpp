#include "domgame/trees.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <map>

#include "domgame/errors.hpp"

namespace domgame {

std::vector<std::vector<int>> rooted_level_sequences(int m) {
  std::vector<std::vector<int>> out;
  if (m < 1) return out;
  std::vector<int> levels(m);
  for (int i = 0; i < m; ++i) levels[i] = i;
  while (true) {
    out.push_back(levels);
    int p = m - 1;
    while (p > 0 && levels[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (levels[q] != levels[p] - 1) --q;
    const int shift = p - q;
    for (int i = p; i < m; ++i) levels[i] = levels[i - shift];
  }
  return out;
}

Graph tree_from_levels(const std::vector<int>& levels) {
  std::vector<Edge> edges;
  std::vector<Vertex> last_at(levels.size() + 1, -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int l = levels[i];
    if (l > 0) edges.emplace_back(last_at[l - 1], static_cast<Vertex>(i));
    last_at[l] = static_cast<Vertex>(i);
  }
  return Graph(static_cast<int>(levels.size()), edges);
}

namespace {

bool branches_below_half(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  int start = 1;
  for (int i = 2; i <= n; ++i) {
    if (i == n || levels[i] == 1) {
      if (2 * (i - start) >= n) return false;
      start = i;
    }
  }
  return true;
}

}  // namespace

void enumerate_trees(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 20) throw ContractError("tree order must be in 1..20");
  for (const auto& levels : rooted_level_sequences(n))
    if (branches_below_half(levels)) visit(tree_from_levels(levels));
  if (n % 2 != 0) return;

  const int half = n / 2;
  const auto halves = rooted_level_sequences(half);
  for (std::size_t i = 0; i < halves.size(); ++i) {
    for (std::size_t j = i; j < halves.size(); ++j) {
      const Graph a = tree_from_levels(halves[i]);
      const Graph b = tree_from_levels(halves[j]);
      std::vector<Edge> edges = a.edges();
      for (auto [u, v] : b.edges()) edges.emplace_back(u + half, v + half);
      edges.emplace_back(0, half);
      visit(Graph(n, edges));
    }
  }
}

std::vector<Graph> enumerate_trees(int n) {
  std::vector<Graph> out;
  enumerate_trees(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// -- canonical form ----------------------------------------------------------

namespace {

std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (Vertex u : g.neighbors(v)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

struct CanonSearch {
  const Graph& g;
  std::vector<Edge> edges;
  // classes[c] = group id per slot (sorted, for next_permutation);
  // members[c][gid] = vertices of that twin group.
  std::vector<std::vector<int>> slots;
  std::vector<std::vector<std::vector<Vertex>>> members;
  std::vector<int> block_start;
  std::vector<int> pos;
  std::uint64_t best = ~std::uint64_t{0};

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (auto [u, v] : edges) {
      int a = pos[u], b = pos[v];
      if (a > b) std::swap(a, b);
      c |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
    }
    return c;
  }

  void place(std::size_t cls) {
    if (cls == slots.size()) {
      best = std::min(best, code());
      return;
    }
    std::vector<int> arrangement = slots[cls];
    do {
      std::vector<std::size_t> used(members[cls].size(), 0);
      for (std::size_t k = 0; k < arrangement.size(); ++k) {
        const int gid = arrangement[k];
        pos[members[cls][gid][used[gid]++]] = block_start[cls] + static_cast<int>(k);
      }
      place(cls + 1);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
};

bool twins(const Graph& g, Vertex u, Vertex v) {
  const VertexSet pair = VertexSet{u, v};
  return (g.neighbors(u) - pair) == (g.neighbors(v) - pair);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw ContractError("canonical_code supports at most 11 vertices");
  if (n <= 1) return 0;
  const std::vector<int> color = refine_colors(g);
  const int classes = *std::max_element(color.begin(), color.end()) + 1;

  CanonSearch s{g, g.edges(), {}, {}, {}, std::vector<int>(n, 0)};
  s.slots.resize(classes);
  s.members.resize(classes);
  s.block_start.resize(classes);
  int start = 0;
  for (int c = 0; c < classes; ++c) {
    s.block_start[c] = start;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != c) continue;
      int gid = -1;
      for (std::size_t k = 0; k < s.members[c].size(); ++k)
        if (twins(g, s.members[c][k].front(), v)) gid = static_cast<int>(k);
      if (gid < 0) {
        gid = static_cast<int>(s.members[c].size());
        s.members[c].emplace_back();
      }
      s.members[c][gid].push_back(v);
      s.slots[c].push_back(gid);
      ++start;
    }
    std::sort(s.slots[c].begin(), s.slots[c].end());
  }
  s.place(0);
  return s.best;
}

namespace {

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> (j * (j - 1) / 2 + i)) & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw ContractError("connected_graphs supports orders 1..8");
  std::vector<std::uint64_t> level{0};  // all graphs of order k, by canonical code
  for (int k = 2; k <= n; ++k) {
    absl::flat_hash_set<std::uint64_t> next;
    const int base = (k - 1) * (k - 2) / 2;
    for (std::uint64_t code : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb)
        next.insert(canonical_code(graph_from_code(k, code | (nb << base))));
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) {
    Graph g = graph_from_code(n, code);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace domgame
