#include "domgame/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "domgame/errors.hpp"

namespace domgame {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw ContractError("graph order " + std::to_string(n) + " outside 0..64");
  closed_.resize(n);
  for (Vertex v = 0; v < n; ++v) closed_[v] = VertexSet::single(v);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ContractError("edge endpoint out of range");
    if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
    if (closed_[u].contains(v))
      throw ContractError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    closed_[u].insert(v);
    closed_[v].insert(u);
    ++m_;
  }
  words_.reserve(n);
  for (auto s : closed_) words_.push_back(s.bits());
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(VertexSet keep, std::vector<Vertex>* origin) const {
  std::vector<Vertex> map(n_, -1);
  std::vector<Vertex> back;
  for (Vertex v : keep & vertices()) {
    map[v] = static_cast<Vertex>(back.size());
    back.push_back(v);
  }
  std::vector<Edge> es;
  for (auto [u, v] : edges())
    if (map[u] >= 0 && map[v] >= 0) es.emplace_back(map[u], map[v]);
  if (origin) *origin = back;
  return Graph(static_cast<int>(back.size()), es);
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet left = vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= closed_[v];
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool Graph::is_connected() const { return n_ >= 1 && components().size() == 1; }

bool Graph::is_forest() const {
  return m_ == n_ - static_cast<int>(components().size());
}

// -- graph6 ------------------------------------------------------------------

namespace {

constexpr int kG6Bias = 63;

bool g6_byte_ok(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 63 && u <= 126;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.empty()) throw FormatError("empty graph6 word", 0);
  if (!g6_byte_ok(text[0])) throw FormatError("invalid graph6 header byte", 0);
  long n = static_cast<unsigned char>(text[0]) - kG6Bias;
  pos = 1;
  if (n == 63) {
    if (text.size() < 4) throw FormatError("truncated graph6 size field", text.size());
    if (text[1] == '~') throw FormatError("graph6 order exceeds 64", 1);
    n = 0;
    for (int i = 1; i <= 3; ++i) {
      if (!g6_byte_ok(text[i])) throw FormatError("invalid graph6 size byte", i);
      n = (n << 6) | (static_cast<unsigned char>(text[i]) - kG6Bias);
    }
    pos = 4;
    if (n > kMaxVertices) throw FormatError("graph6 order exceeds 64", 1);
    if (n <= 62) throw FormatError("non-canonical graph6 size field", 1);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) throw FormatError("truncated graph6 adjacency data", text.size());
  if (text.size() - pos > need) throw FormatError("trailing bytes after graph6 word", pos + need);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + k / 6;
      if (!g6_byte_ok(text[at])) throw FormatError("invalid graph6 data byte", at);
      int word = static_cast<unsigned char>(text[at]) - kG6Bias;
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (std::size_t at = pos + k / 6; at < pos + need; ++at) {
    if (!g6_byte_ok(text[at])) throw FormatError("invalid graph6 data byte", at);
    int word = static_cast<unsigned char>(text[at]) - kG6Bias;
    int used = (at == pos + k / 6) ? static_cast<int>(k % 6) : 0;
    if (used > 0 && (word & ((1 << (6 - used)) - 1)) != 0)
      throw FormatError("nonzero graph6 padding bits", at);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
    out.push_back(static_cast<char>((n & 63) + kG6Bias));
  }
  int word = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kG6Bias));
        word = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kG6Bias));
  return out;
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const FormatError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

// -- edge list ---------------------------------------------------------------

namespace {

struct LineReader {
  std::string_view rest;
  std::size_t line_no = 0;

  bool next(std::string_view& line) {
    while (!rest.empty()) {
      ++line_no;
      auto nl = rest.find('\n');
      line = rest.substr(0, nl);
      rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
    }
    return false;
  }
};

std::vector<long> read_ints(std::string_view line, std::size_t line_no) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw ParseError("expected integer", line_no);
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw ParseError("missing header line", 1);
  auto header = read_ints(line, reader.line_no);
  if (header.size() != 2) throw ParseError("header must be \"n m\"", reader.line_no);
  const long n = header[0], m = header[1];
  if (n < 1 || n > kMaxVertices) throw ParseError("vertex count outside 1..64", reader.line_no);
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge count out of range", reader.line_no);

  std::vector<Edge> edges;
  std::vector<VertexSet> seen(n);
  for (long e = 0; e < m; ++e) {
    if (!reader.next(line)) throw ParseError("missing edge line", reader.line_no + 1);
    auto uv = read_ints(line, reader.line_no);
    if (uv.size() != 2) throw ParseError("edge line must be \"u v\"", reader.line_no);
    long u = uv[0], v = uv[1];
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex index out of range", reader.line_no);
    if (u == v) throw ParseError("self-loop", reader.line_no);
    if (seen[u].contains(static_cast<Vertex>(v))) throw ParseError("duplicate edge", reader.line_no);
    seen[u].insert(static_cast<Vertex>(v));
    seen[v].insert(static_cast<Vertex>(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (reader.next(line)) throw ParseError("unexpected trailing content", reader.line_no);
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// -- properties --------------------------------------------------------------

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.order = g.order();
  s.size = g.size();
  s.max_degree = g.max_degree();
  s.is_connected = g.is_connected();
  s.is_tree = s.is_connected && s.size == s.order - 1;
  return s;
}

namespace {

struct DominationSearch {
  const Graph& g;
  int best;

  void run(VertexSet undominated, int chosen) {
    if (undominated.empty()) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + 1 >= best) return;
    int max_cover = 0;
    for (Vertex v = 0; v < g.order(); ++v)
      max_cover = std::max(max_cover, (g.closed_neighborhood(v) & undominated).size());
    const int lower = (undominated.size() + max_cover - 1) / max_cover;
    if (chosen + lower >= best) return;

    // Branch on the undominated vertex with fewest candidate dominators.
    Vertex pivot = -1;
    int fewest = kMaxVertices + 1;
    for (Vertex u : undominated) {
      int c = g.closed_neighborhood(u).size();
      if (c < fewest) {
        fewest = c;
        pivot = u;
      }
    }
    std::vector<std::pair<int, Vertex>> order;
    for (Vertex v : g.closed_neighborhood(pivot))
      order.emplace_back(-(g.closed_neighborhood(v) & undominated).size(), v);
    std::sort(order.begin(), order.end());
    for (auto [neg, v] : order) run(undominated - g.closed_neighborhood(v), chosen + 1);
  }
};

int greedy_domination(const Graph& g) {
  VertexSet left = g.vertices();
  int count = 0;
  while (!left.empty()) {
    Vertex pick = 0;
    int cover = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      int c = (g.closed_neighborhood(v) & left).size();
      if (c > cover) {
        cover = c;
        pick = v;
      }
    }
    left -= g.closed_neighborhood(pick);
    ++count;
  }
  return count;
}

}  // namespace

int domination_number(const Graph& g) {
  if (g.order() == 0) return 0;
  DominationSearch search{g, greedy_domination(g)};
  search.run(g.vertices(), 0);
  return search.best;
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) return false;
  for (Vertex v = 0; v < h.order(); ++v)
    if (!h.closed_neighborhood(v).subset_of(g.closed_neighborhood(v))) return false;
  return true;
}

Graph with_edges(int n, std::span<const Edge> edges) { return Graph(n, edges); }

}  // namespace domgame
