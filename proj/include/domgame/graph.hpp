#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domgame/vertex_set.hpp"

namespace domgame {

using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Each vertex stores its closed neighborhood N[v] as a VertexSet, so the
/// game search never touches anything but machine words.
class Graph {
public:
  Graph() = default;

  /// Throws ContractError on self-loops, duplicate edges, or out-of-range
  /// endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  VertexSet closed_neighborhood(Vertex v) const { return closed_[v]; }
  VertexSet neighbors(Vertex v) const { return closed_[v] - VertexSet::single(v); }
  int degree(Vertex v) const { return closed_[v].size() - 1; }
  bool adjacent(Vertex u, Vertex v) const { return closed_[u].contains(v) && u != v; }
  int max_degree() const;

  /// Closed neighborhoods indexed by vertex; the layout the move kernels read.
  std::span<const std::uint64_t> closed_words() const { return words_; }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`, relabeled in ascending order. `origin`
  /// receives new index -> old index when non-null.
  Graph induced(VertexSet keep, std::vector<Vertex>* origin = nullptr) const;

  /// Components as vertex sets, ordered by smallest member.
  std::vector<VertexSet> components() const;
  bool is_connected() const;
  bool is_forest() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && words_ == o.words_; }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> closed_;
  std::vector<std::uint64_t> words_;
};

// -- ingestion ---------------------------------------------------------------

/// Header-less graph6. Throws FormatError naming the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// "n m" followed by m lines "u v", 0-indexed. Throws ParseError with the
/// 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Reads one graph6 word per non-empty line; surrounding whitespace is
/// ignored. Errors carry the line number in the message.
std::vector<Graph> parse_graph6_stream(std::string_view text);

// -- properties --------------------------------------------------------------

struct GraphStats {
  bool is_connected = false;
  bool is_tree = false;
  int max_degree = 0;
  int order = 0;
  int size = 0;
};

GraphStats graph_stats(const Graph& g);

/// Exact domination number by branch and bound over closed neighborhoods.
int domination_number(const Graph& g);

/// Spanning subgraph test: same order and E(h) a subset of E(g).
bool is_spanning_subgraph(const Graph& h, const Graph& g);

/// Graph with the same vertex set and only the given edges.
Graph with_edges(int n, std::span<const Edge> edges);

}  // namespace domgame
