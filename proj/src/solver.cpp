#include "domgame/solver.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <future>
#include <limits>
#include <random>

#include "domgame/errors.hpp"
#include "domgame/kernels.hpp"

namespace domgame {

namespace {

struct MoveBuffer {
  std::array<std::uint64_t, kMaxVertices> gain{};
  std::array<std::uint8_t, kMaxVertices> count{};
  std::array<Vertex, kMaxVertices> moves{};
  std::array<std::uint64_t, kMaxVertices> move_gain{};
  int size = 0;
};

// Fills `buf` with the legal moves of (dominated, mover), pruned if asked.
void expand(const Graph& g, std::uint64_t dominated, Mover mover, bool prune,
            const kernels::KernelTable& k, MoveBuffer& buf) {
  const int n = g.order();
  std::uint64_t legal = k.gains(g.closed_words().data(), n, dominated, buf.gain.data(), buf.count.data());
  int size = 0;
  for (Vertex v : VertexSet(legal)) {
    buf.moves[size] = v;
    buf.move_gain[size] = buf.gain[v];
    ++size;
  }
  buf.size = size;
  if (!prune || size < 2) return;

  int kept = 0;
  std::array<Vertex, kMaxVertices> out{};
  std::array<std::uint64_t, kMaxVertices> out_gain{};
  for (int i = 0; i < size; ++i) {
    const kernels::Relation r = k.relate(buf.move_gain.data(), size, buf.move_gain[i]);
    const std::uint64_t equal = r.subset & r.superset;
    const std::uint64_t earlier = (std::uint64_t{1} << i) - 1;
    const std::uint64_t beaten = mover == Mover::Dominator ? r.superset : r.subset;
    const bool drop = ((beaten & ~equal) != 0) || ((equal & earlier) != 0);
    if (!drop) {
      out[kept] = buf.moves[i];
      out_gain[kept] = buf.move_gain[i];
      ++kept;
    }
  }
  std::copy_n(out.begin(), kept, buf.moves.begin());
  std::copy_n(out_gain.begin(), kept, buf.move_gain.begin());
  buf.size = kept;
}

}  // namespace

std::vector<Vertex> legal_moves(const DominationState& state) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < state.graph.order(); ++v)
    if (!state.gain(v).empty()) out.push_back(v);
  return out;
}

std::vector<Vertex> prune_dominated_moves(const DominationState& state,
                                          std::span<const Vertex> moves) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const VertexSet gu = state.gain(moves[i]);
    bool drop = false;
    for (std::size_t j = 0; j < moves.size() && !drop; ++j) {
      if (j == i) continue;
      const VertexSet gv = state.gain(moves[j]);
      if (gu == gv) {
        drop = moves[j] < moves[i];
      } else if (state.mover == Mover::Dominator) {
        drop = gu.subset_of(gv);
      } else {
        drop = gv.subset_of(gu);
      }
    }
    if (!drop) out.push_back(moves[i]);
  }
  return out;
}

// -- GameSolver --------------------------------------------------------------

struct GameSolver::Impl {
  Graph g;
  SolverOptions opt;
  const kernels::KernelTable& k = kernels::active();
  std::uint64_t full = 0;
  std::array<absl::flat_hash_map<std::uint64_t, std::uint8_t>, 2> memo;
  SearchStats stats;

  Impl(Graph graph, SolverOptions o) : g(std::move(graph)), opt(o), full(g.vertices().bits()) {}

  std::size_t table_size() const { return memo[0].size() + memo[1].size(); }

  int search(std::uint64_t dominated, Mover mover) {
    if (dominated == full) return 0;
    auto& table = memo[static_cast<int>(mover)];
    if (auto it = table.find(dominated); it != table.end()) {
      ++stats.memo_hits;
      return it->second;
    }
    ++stats.nodes_expanded;

    MoveBuffer buf;
    expand(g, dominated, mover, opt.prune, k, buf);
    const int undominated = std::popcount(full & ~dominated);

    // Dominator tries big gains first, Staller small ones, so that the
    // bound cutoff fires early. Stable on vertex index for determinism.
    std::array<int, kMaxVertices> order{};
    for (int i = 0; i < buf.size; ++i) order[i] = i;
    auto gain_of = [&](int i) { return buf.count[buf.moves[i]]; };
    if (mover == Mover::Dominator)
      std::stable_sort(order.begin(), order.begin() + buf.size,
                       [&](int a, int b) { return gain_of(a) > gain_of(b); });
    else
      std::stable_sort(order.begin(), order.begin() + buf.size,
                       [&](int a, int b) { return gain_of(a) < gain_of(b); });

    int best;
    if (mover == Mover::Dominator) {
      int max_gain = 1;
      for (int i = 0; i < buf.size; ++i) max_gain = std::max<int>(max_gain, gain_of(i));
      const int lower = (undominated + max_gain - 1) / max_gain;
      best = std::numeric_limits<int>::max();
      for (int i = 0; i < buf.size; ++i) {
        const int idx = order[i];
        best = std::min(best, 1 + search(dominated | buf.move_gain[idx], Mover::Staller));
        if (opt.bounds && best <= lower) break;
      }
    } else {
      const int upper = undominated;
      best = 0;
      for (int i = 0; i < buf.size; ++i) {
        const int idx = order[i];
        best = std::max(best, 1 + search(dominated | buf.move_gain[idx], Mover::Dominator));
        if (opt.bounds && best >= upper) break;
      }
    }

    table.emplace(dominated, static_cast<std::uint8_t>(best));
    const std::size_t size = table_size();
    stats.max_table_size = std::max<std::uint64_t>(stats.max_table_size, size);
    if (opt.memo_cap != 0 && size > opt.memo_cap)
      throw ResourceGuardError("memo table exceeded cap of " + std::to_string(opt.memo_cap) +
                               " entries");
    return best;
  }
};

GameSolver::GameSolver(Graph g, SolverOptions options)
    : impl_(std::make_unique<Impl>(std::move(g), options)) {}
GameSolver::~GameSolver() = default;
GameSolver::GameSolver(GameSolver&&) noexcept = default;
GameSolver& GameSolver::operator=(GameSolver&&) noexcept = default;

const Graph& GameSolver::graph() const { return impl_->g; }
const SolverOptions& GameSolver::options() const { return impl_->opt; }
SearchStats GameSolver::stats() const { return impl_->stats; }
std::size_t GameSolver::table_size() const { return impl_->table_size(); }

int GameSolver::value(VertexSet dominated, Mover mover) {
  if (!dominated.subset_of(impl_->g.vertices()))
    throw ContractError("dominated set exceeds the vertex set");
  return impl_->search(dominated.bits(), mover);
}

SolveResult GameSolver::solve(VertexSet dominated, Mover mover) {
  if (!dominated.subset_of(impl_->g.vertices()))
    throw ContractError("dominated set exceeds the vertex set");
  SolveResult result;
  if (dominated == impl_->g.vertices()) {
    result.stats = impl_->stats;
    return result;
  }
  ++impl_->stats.nodes_expanded;
  MoveBuffer buf;
  expand(impl_->g, dominated.bits(), mover, impl_->opt.prune && !impl_->opt.exact_front,
         impl_->k, buf);
  std::vector<int> child(buf.size);
  for (int i = 0; i < buf.size; ++i)
    child[i] = 1 + impl_->search(dominated.bits() | buf.move_gain[i], other(mover));
  result.value = mover == Mover::Dominator ? *std::min_element(child.begin(), child.end())
                                           : *std::max_element(child.begin(), child.end());
  for (int i = 0; i < buf.size; ++i)
    if (child[i] == result.value) result.optimal_first_moves.insert(buf.moves[i]);
  result.stats = impl_->stats;
  return result;
}

MoveTrace GameSolver::optimal_line(VertexSet dominated, Mover mover) {
  MoveTrace trace;
  const Graph& g = impl_->g;
  while (dominated != g.vertices()) {
    const int target = value(dominated, mover);
    for (Vertex v = 0; v < g.order(); ++v) {
      const VertexSet gain = g.closed_neighborhood(v) - dominated;
      if (gain.empty()) continue;
      if (1 + value(dominated | gain, other(mover)) == target) {
        trace.push_back({mover, v, gain.size()});
        dominated |= gain;
        break;
      }
    }
    mover = other(mover);
  }
  return trace;
}

SolveResult game_value(const DominationState& state, const SolverOptions& options) {
  GameSolver solver(state.graph, options);
  return solver.solve(state.dominated, state.mover);
}

std::pair<int, int> gamma_pair(const Graph& g, const SolverOptions& options) {
  GameSolver solver(g, options);
  return {solver.value({}, Mover::Dominator), solver.value({}, Mover::Staller)};
}

int root_split_value(const DominationState& state, int workers, const SolverOptions& options) {
  if (state.finished()) return 0;
  auto moves = legal_moves(state);
  if (options.prune) moves = prune_dominated_moves(state, moves);
  workers = std::max(1, workers);

  std::vector<int> child(moves.size());
  std::size_t next = 0;
  while (next < moves.size()) {
    std::vector<std::future<int>> batch;
    const std::size_t end = std::min(moves.size(), next + static_cast<std::size_t>(workers));
    for (std::size_t i = next; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, [&, i] {
        GameSolver branch(state.graph, options);
        return 1 + branch.value(state.dominated | state.gain(moves[i]), other(state.mover));
      }));
    }
    for (std::size_t i = next; i < end; ++i) child[i] = batch[i - next].get();
    next = end;
  }
  return state.mover == Mover::Dominator ? *std::min_element(child.begin(), child.end())
                                         : *std::max_element(child.begin(), child.end());
}

// -- cheap Staller move ----------------------------------------------------

Vertex staller_cheap_move(const DominationState& state) {
  if (!state.graph.is_forest()) throw ContractError("staller_cheap_move requires a forest");
  if (state.finished()) throw ContractError("staller_cheap_move requires an undominated vertex");
  const ResidualGraph res = residual(state);
  for (Vertex v = 0; v < res.graph.order(); ++v)
    if (res.graph.degree(v) <= 1) return res.origin[v];
  // A nonempty forest always has a vertex of degree at most one.
  throw ContractError("residual forest without a leaf");
}

// -- invariant checks ------------------------------------------------------

InvariantReport verify_invariants(const Graph& g, int samples, std::uint64_t seed) {
  InvariantReport rep;
  GameSolver solver(g);
  rep.gamma = domination_number(g);
  rep.game = solver.value({}, Mover::Dominator);
  rep.staller_game = solver.value({}, Mover::Staller);

  rep.bound_chain = rep.gamma <= rep.game && rep.game <= 2 * rep.gamma - 1;
  if (g.order() == 0) rep.bound_chain = rep.game == 0;
  if (!rep.bound_chain)
    rep.failures.push_back("bound chain: gamma=" + std::to_string(rep.gamma) +
                           " gamma_g=" + std::to_string(rep.game));
  rep.start_gap = std::abs(rep.game - rep.staller_game) <= 1;
  if (!rep.start_gap)
    rep.failures.push_back("start gap: gamma_g=" + std::to_string(rep.game) +
                           " gamma_g'=" + std::to_string(rep.staller_game));

  std::mt19937_64 rng(seed);
  const std::uint64_t full = g.vertices().bits();
  rep.continuation = true;
  for (int s = 0; s < samples; ++s) {
    const VertexSet a(rng() & full);
    const VertexSet b(rng() & a.bits());
    for (Mover m : {Mover::Dominator, Mover::Staller}) {
      const int va = solver.value(a, m), vb = solver.value(b, m);
      if (va > vb) {
        rep.continuation = false;
        rep.failures.push_back(std::string("continuation (") + to_string(m) + "): A=" +
                               std::to_string(a.bits()) + " B=" + std::to_string(b.bits()));
      }
    }
    ++rep.continuation_samples;
  }
  return rep;
}

}  // namespace domgame
