#include "domgame/families.hpp"

#include <vector>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }
std::string idx(const std::string& base, int i, int j) {
  return base + "_" + std::to_string(i) + "_" + std::to_string(j);
}

class Builder {
public:
  Vertex add(const std::string& label) {
    const Vertex v = next_++;
    if (!labels_.emplace(label, v).second) throw ContractError("duplicate label " + label);
    return v;
  }
  void edge(const std::string& a, const std::string& b) { edges_.emplace_back(labels_.at(a), labels_.at(b)); }
  void edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }
  Vertex operator[](const std::string& label) const { return labels_.at(label); }
  Vertex count() const { return next_; }

  LabeledGraph finish(std::string family, std::map<std::string, int> params,
                      const std::vector<Edge>& drop = {}) const {
    std::vector<Edge> kept;
    for (auto e : edges_) {
      bool skip = false;
      for (auto d : drop)
        if ((d.first == e.first && d.second == e.second) || (d.first == e.second && d.second == e.first))
          skip = true;
      if (!skip) kept.push_back(e);
    }
    return {Graph(next_, kept), labels_, std::move(family), std::move(params)};
  }

private:
  Vertex next_ = 0;
  std::map<std::string, Vertex> labels_;
  std::vector<Edge> edges_;
};

int need(const std::optional<int>& p, const char* name, int min) {
  if (!p) throw ContractError(std::string("missing parameter ") + name);
  if (*p < min)
    throw ContractError(std::string("parameter ") + name + " must be >= " + std::to_string(min));
  return *p;
}

void check_order(int order) {
  if (order > kMaxVertices)
    throw ContractError("family member would have " + std::to_string(order) + " vertices (max 64)");
}

// T(r) body shared by the three tree constructions: w, then a_i b_i c_i per
// gadget, then the gadget leaves.
void add_tree_t(Builder& b, int r) {
  b.add("w");
  for (int i = 1; i <= r; ++i) {
    b.add(idx("a", i));
    b.add(idx("b", i));
    b.add(idx("c", i));
  }
  for (int i = 1; i <= r; ++i) {
    b.add(idx("l", i));
    b.add(idx("l'", i));
  }
  for (int i = 1; i <= r; ++i) {
    b.edge("w", idx("b", i));
    b.edge(idx("a", i), idx("b", i));
    b.edge(idx("b", i), idx("c", i));
    b.edge(idx("l", i), idx("a", i));
    b.edge(idx("c", i), idx("l'", i));
  }
}

}  // namespace

Vertex LabeledGraph::at(const std::string& role) const {
  auto it = labels.find(role);
  if (it == labels.end()) throw ContractError("no vertex labeled " + role);
  return it->second;
}

LabeledGraph make_caterpillar(int s, int t) {
  if (s < 2 || t < 1) throw ContractError("caterpillar requires s >= 2 and t >= 1");
  check_order(s * t);
  Builder b;
  for (int i = 1; i <= t; ++i) b.add(idx("u", i));
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j < s; ++j) b.add(idx("l", i, j));
  for (int i = 1; i < t; ++i) b.edge(idx("u", i), idx("u", i + 1));
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j < s; ++j) b.edge(idx("u", i), idx("l", i, j));
  return b.finish("caterpillar", {{"s", s}, {"t", t}});
}

LabeledGraph make_tree_t(int r) {
  if (r < 1) throw ContractError("T requires r >= 1");
  check_order(5 * r + 1);
  Builder b;
  add_tree_t(b, r);
  return b.finish("T", {{"r", r}});
}

LabeledGraph make_tree_t_prime(int r) {
  if (r < 1) throw ContractError("T_prime requires r >= 1");
  check_order(5 * r + 3);
  Builder b;
  add_tree_t(b, r);
  b.add("y");
  b.add("z");
  b.edge("w", "y");
  b.edge("y", "z");
  return b.finish("T_prime", {{"r", r}});
}

LabeledGraph make_tree_t_dprime(int r) {
  if (r < 1) throw ContractError("T_dprime requires r >= 1");
  check_order(5 * r + 5);
  Builder b;
  add_tree_t(b, r);
  b.add("p");
  b.add("q");
  b.add("m");
  b.add("n");
  b.edge("b_1", "p");
  b.edge("p", "q");
  b.edge("b_1", "m");
  b.edge("m", "n");
  return b.finish("T_dprime", {{"r", r}});
}

bool is_tree_family(const std::string& name) {
  return name == "caterpillar" || name == "T" || name == "T_prime" || name == "T_dprime";
}

bool is_spanning_family(const std::string& name) {
  return name == "houses" || name == "layered3conn" || name == "starclique" || name == "web" ||
         name == "fig6";
}

LabeledGraph make_tree_family(const std::string& name, const FamilyParams& p) {
  if (name == "caterpillar") return make_caterpillar(need(p.s, "s", 2), need(p.t, "t", 1));
  if (name == "T") return make_tree_t(need(p.r, "r", 1));
  if (name == "T_prime") return make_tree_t_prime(need(p.r, "r", 1));
  if (name == "T_dprime") return make_tree_t_dprime(need(p.r, "r", 1));
  throw ContractError("unknown tree family " + name);
}

namespace {

std::pair<LabeledGraph, LabeledGraph> houses(int t) {
  check_order(4 * t + 1);
  Builder b;
  b.add("x");
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= 4; ++j) b.add("p" + std::to_string(j) + "_" + std::to_string(i));
  std::vector<Edge> drop;
  for (int i = 1; i <= t; ++i) {
    auto p = [&](int j) { return "p" + std::to_string(j) + "_" + std::to_string(i); };
    b.edge("x", p(1));
    b.edge(p(1), p(2));
    b.edge(p(2), p(3));
    b.edge(p(3), p(4));
    b.edge(p(4), "x");
    b.edge(p(1), p(3));
    drop.emplace_back(b[p(3)], b[p(4)]);
  }
  return {b.finish("houses", {{"t", t}}), b.finish("houses", {{"t", t}}, drop)};
}

std::pair<LabeledGraph, LabeledGraph> layered3conn(int m) {
  check_order(m * (m + 2));
  Builder b;
  for (int i = 1; i <= m; ++i) {
    b.add(idx("x", i));
    b.add(idx("y", i));
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) b.add(idx("a", i, j));

  // Clique on all x_i, y_i.
  for (Vertex u = 0; u < 2 * m; ++u)
    for (Vertex v = u + 1; v < 2 * m; ++v) b.edge(u, v);
  // Each X_i = {a_i_*, x_i, y_i} is a clique; x_i y_i is already present.
  for (int i = 1; i <= m; ++i) {
    std::vector<Vertex> block;
    for (int j = 1; j <= m; ++j) block.push_back(b[idx("a", i, j)]);
    for (std::size_t u = 0; u < block.size(); ++u) {
      b.edge(block[u], b[idx("x", i)]);
      b.edge(block[u], b[idx("y", i)]);
      for (std::size_t v = u + 1; v < block.size(); ++v) b.edge(block[u], block[v]);
    }
  }
  std::vector<Edge> matching;
  for (int i = 1; i <= m - 1; ++i)
    for (int j = i; j <= m - 1; ++j) {
      const Vertex u = b[idx("a", i, j)], v = b[idx("a", j + 1, i)];
      b.edge(u, v);
      matching.emplace_back(u, v);
    }
  return {b.finish("layered3conn", {{"m", m}}), b.finish("layered3conn", {{"m", m}}, matching)};
}

std::pair<LabeledGraph, LabeledGraph> starclique(int m, int n) {
  check_order(n * m + 1);
  Builder b;
  b.add("x");
  for (int i = 1; i <= m; ++i) b.add(idx("v", i));
  for (int i = 1; i <= m; ++i)
    for (int j = 2; j <= n; ++j) b.add(idx("k", i, j));
  for (int i = 1; i <= m; ++i) {
    b.edge("x", idx("v", i));
    std::vector<Vertex> clique{b[idx("v", i)]};
    for (int j = 2; j <= n; ++j) clique.push_back(b[idx("k", i, j)]);
    for (std::size_t u = 0; u < clique.size(); ++u)
      for (std::size_t v = u + 1; v < clique.size(); ++v) b.edge(clique[u], clique[v]);
  }
  auto g = b.finish("starclique", {{"m", m}, {"n", n}});
  return {g, g};
}

std::pair<LabeledGraph, LabeledGraph> web(int k) {
  check_order(10 * k + 2);
  Builder b;
  b.add("x");
  b.add("y");
  auto xs = [](int i, int j) { return "x_" + std::to_string(i) + "^" + std::to_string(j); };
  auto ys = [](int i, int j) { return "y_" + std::to_string(i) + "^" + std::to_string(j); };
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= 5; ++j) b.add(xs(i, j));
    for (int j = 1; j <= 5; ++j) b.add(ys(i, j));
  }
  b.edge("x", "y");
  std::vector<Edge> rungs;
  for (int i = 1; i <= k; ++i) {
    b.edge("y", ys(i, 1));
    for (int j = 1; j <= 5; ++j) b.edge("x", xs(i, j));
    for (int j = 1; j < 5; ++j) b.edge(ys(i, j), ys(i, j + 1));
    for (int j = 1; j <= 5; ++j) {
      b.edge(xs(i, j), ys(i, j));
      rungs.emplace_back(b[xs(i, j)], b[ys(i, j)]);
    }
  }
  return {b.finish("web", {{"k", k}}), b.finish("web", {{"k", k}}, rungs)};
}

std::pair<LabeledGraph, LabeledGraph> fig6() {
  // Drawn with vertices 1..8; stored 0-indexed.
  static constexpr int kEdges[][2] = {{1, 2}, {2, 3}, {2, 4}, {1, 5}, {2, 6},
                                      {3, 7}, {4, 8}, {5, 6}, {6, 7}, {7, 8}};
  static constexpr int kNonTree[][2] = {{1, 5}, {3, 7}, {4, 8}};
  Builder b;
  for (int v = 1; v <= 8; ++v) b.add(std::to_string(v));
  for (auto [u, v] : kEdges) b.edge(std::to_string(u), std::to_string(v));
  std::vector<Edge> drop;
  for (auto [u, v] : kNonTree) drop.emplace_back(u - 1, v - 1);
  return {b.finish("fig6", {}), b.finish("fig6", {}, drop)};
}

}  // namespace

std::pair<LabeledGraph, LabeledGraph> make_spanning_pair(const std::string& name,
                                                         const FamilyParams& p) {
  if (name == "houses") return houses(need(p.t, "t", 1));
  if (name == "layered3conn") return layered3conn(need(p.m, "m", 3));
  if (name == "starclique") return starclique(need(p.m, "m", 2), need(p.n, "n", 3));
  if (name == "web") return web(need(p.k, "k", 1));
  if (name == "fig6") return fig6();
  throw ContractError("unknown spanning family " + name);
}

PartialFixture make_partial_fixture(const std::string& name) {
  if (name == "P3'") {
    Graph g(3, {{0, 1}, {1, 2}});
    return {DominationState(g, VertexSet{0}), name, {{"v1", 0}, {"v2", 1}, {"v3", 2}}};
  }
  if (name == "P5'") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    return {DominationState(g, VertexSet{2}), name,
            {{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 3}, {"v5", 4}}};
  }
  if (name == "F") {
    const LabeledGraph t = make_tree_t_dprime(1);
    const Vertex w = t.at("w"), b1 = t.at("b_1");
    std::vector<Edge> kept;
    for (auto e : t.graph.edges())
      if (!((e.first == w && e.second == b1) || (e.first == b1 && e.second == w))) kept.push_back(e);
    const Graph cut(t.graph.order(), kept);
    VertexSet branch;
    for (auto c : cut.components())
      if (c.contains(b1)) branch = c;
    std::vector<Vertex> origin;
    Graph f = cut.induced(branch, &origin);
    std::map<std::string, Vertex> labels;
    for (const auto& [role, v] : t.labels)
      for (std::size_t i = 0; i < origin.size(); ++i)
        if (origin[i] == v) labels[role] = static_cast<Vertex>(i);
    const VertexSet dominated{labels.at("b_1")};
    return {DominationState(std::move(f), dominated), name, std::move(labels)};
  }
  throw ContractError("unknown partial fixture " + name);
}

}  // namespace domgame
