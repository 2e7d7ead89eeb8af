#include "domgame/suites.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "domgame/census.hpp"
#include "domgame/errors.hpp"
#include "domgame/solver.hpp"
#include "domgame/spanning.hpp"
#include "domgame/trees.hpp"
#include "parallel.hpp"

namespace domgame {

namespace {

constexpr std::size_t kMaxReportedFailures = 20;

void fail(SuiteResult& r, std::string msg) {
  r.pass = false;
  if (r.failures.size() < kMaxReportedFailures) r.failures.push_back(std::move(msg));
}

// Per-item outcomes merged in index order, so reports do not depend on the
// worker count.
struct ItemOutcome {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
};

SuiteResult merge(std::string name, std::vector<ItemOutcome>& items) {
  SuiteResult r;
  r.name = std::move(name);
  for (auto& it : items) {
    r.checked += it.checked;
    for (auto& f : it.failures) fail(r, std::move(f));
  }
  return r;
}

std::uint64_t item_seed(std::uint64_t seed, std::size_t index, std::uint64_t salt) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(index), salt};
  std::mt19937_64 rng(seq);
  return rng();
}

VertexSet random_subset(std::mt19937_64& rng, const Graph& g) {
  return VertexSet(rng() & g.vertices().bits());
}

Graph random_forest(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.2) continue;
    edges.emplace_back(static_cast<Vertex>(rng() % v), v);
  }
  return Graph(n, edges);
}

std::string describe(const Graph& g) { return emit_graph6(g); }
std::string describe(const Graph& g, VertexSet d) {
  return emit_graph6(g) + " D=" + std::to_string(d.bits());
}

// thm1 / thm2 / cp share one solver per graph.
struct TheoremOutcomes {
  std::vector<ItemOutcome> thm1, thm2, cp;
};

TheoremOutcomes theorem_checks(const std::vector<Graph>& corpus, const SuiteConfig& cfg) {
  TheoremOutcomes out;
  out.thm1.resize(corpus.size());
  out.thm2.resize(corpus.size());
  out.cp.resize(corpus.size());
  detail::parallel_for(corpus.size(), cfg.workers, [&](std::size_t i) {
    const Graph& g = corpus[i];
    const InvariantReport rep = verify_invariants(g, cfg.samples, item_seed(cfg.seed, i, 1));
    out.thm1[i].checked = out.thm2[i].checked = 1;
    out.cp[i].checked = static_cast<std::uint64_t>(rep.continuation_samples);
    if (!rep.bound_chain)
      out.thm1[i].failures.push_back(describe(g) + " gamma=" + std::to_string(rep.gamma) +
                                     " gamma_g=" + std::to_string(rep.game));
    if (!rep.start_gap)
      out.thm2[i].failures.push_back(describe(g) + " gamma_g=" + std::to_string(rep.game) +
                                     " gamma_g'=" + std::to_string(rep.staller_game));
    if (!rep.continuation)
      for (const auto& f : rep.failures)
        if (f.starts_with("continuation")) out.cp[i].failures.push_back(describe(g) + " " + f);
  });
  return out;
}

SuiteResult lemma3_suite(const SuiteConfig& cfg) {
  struct Case {
    Graph g;
    VertexSet dominated;
  };
  std::vector<Case> cases;
  std::mt19937_64 rng(item_seed(cfg.seed, 0, 3));
  for (int n = 1; n <= std::min(cfg.n_max, 10); ++n)
    for (const Graph& t : enumerate_trees(n)) {
      cases.push_back({t, {}});
      for (int s = 0; s < cfg.state_samples; ++s) cases.push_back({t, random_subset(rng, t)});
    }
  const int forests = std::max(cfg.random_graphs, 50);
  for (int f = 0; f < forests; ++f) {
    Graph g = random_forest(rng, 1 + static_cast<int>(rng() % 12));
    VertexSet d = random_subset(rng, g);
    cases.push_back({std::move(g), d});
  }

  std::vector<ItemOutcome> items(cases.size());
  detail::parallel_for(cases.size(), cfg.workers, [&](std::size_t i) {
    const DominationState state(cases[i].g, cases[i].dominated);
    if (state.finished()) return;
    items[i].checked = 1;
    const Vertex x = staller_cheap_move(state);
    const int gain = state.gain(x).size();
    if (gain < 1 || gain > 2)
      items[i].failures.push_back(describe(state.graph, state.dominated) + " move " +
                                  std::to_string(x) + " gains " + std::to_string(gain));
  });
  return merge("lemma3", items);
}

SuiteResult lowerbound_suite(const SuiteConfig& cfg) {
  SuiteResult r;
  r.name = "lowerbound";
  CensusOptions opt;
  opt.workers = cfg.workers;
  for (int n = 1; n <= cfg.n_max; ++n) {
    const LowerBoundReport rep = lower_bound_check(n, opt);
    r.checked += rep.trees_checked;
    for (const auto& v : rep.violations)
      fail(r, v.graph6 + " gamma_g=" + std::to_string(v.gg) + " < bound " + std::to_string(v.bound));
  }
  return r;
}

SuiteResult pairs_suite(const SuiteConfig& cfg) {
  SuiteResult r;
  r.name = "pairs";
  CensusOptions opt;
  opt.workers = cfg.workers;
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (const auto& rec : pair_census(n, opt)) {
      r.checked += rec.count;
      const std::string pair = "(" + std::to_string(rec.gg) + "," + std::to_string(rec.ggp) + ")";
      if (std::abs(rec.gg - rec.ggp) > 1) fail(r, "n=" + std::to_string(n) + " pair " + pair);
      if (rec.ggp == rec.gg - 1)
        fail(r, "tree realizing " + pair + ": " + rec.witnesses.front());
    }
  }
  return r;
}

SuiteResult prop5_suite(const std::vector<Graph>& corpus, const SuiteConfig& cfg) {
  SuiteResult r;
  r.name = "prop5";
  TreeValueCache cache;
  SpanningOptions opt;
  opt.workers = cfg.workers;
  for (const Graph& g : corpus) {
    if (!g.is_connected()) continue;
    const SpanningReport rep = spanning_extremes(g, opt, &cache);
    r.checked += rep.tree_count;
    if (!rep.prop5_ok)
      fail(r, describe(g) + " min tree gamma_g=" + std::to_string(rep.min_tree.value) +
                  " vs gamma_g(G)=" + std::to_string(rep.game));
    if (rep.min_tree_gamma < rep.gamma)
      fail(r, describe(g) + " spanning tree with smaller domination number");
  }
  return r;
}

SuiteResult residual_suite(const std::vector<Graph>& corpus, const SuiteConfig& cfg) {
  std::vector<ItemOutcome> items(corpus.size());
  detail::parallel_for(corpus.size(), cfg.workers, [&](std::size_t i) {
    const Graph& g = corpus[i];
    std::mt19937_64 rng(item_seed(cfg.seed, i, 5));
    GameSolver solver(g);
    std::vector<VertexSet> starts{VertexSet{}};
    for (int s = 0; s < cfg.state_samples; ++s) starts.push_back(random_subset(rng, g));
    for (VertexSet d : starts) {
      const ResidualGraph res = residual(DominationState(g, d));
      GameSolver reduced(res.graph);
      for (Mover m : {Mover::Dominator, Mover::Staller}) {
        ++items[i].checked;
        const int a = solver.value(d, m);
        const int b = reduced.value(res.dominated, m);
        if (a != b)
          items[i].failures.push_back(describe(g, d) + " " + to_string(m) + ": " +
                                      std::to_string(a) + " vs residual " + std::to_string(b));
      }
    }
  });
  return merge("residual", items);
}

SuiteResult oracle_suite(const std::vector<Graph>& corpus, const SuiteConfig& cfg) {
  std::vector<ItemOutcome> items(corpus.size());
  detail::parallel_for(corpus.size(), cfg.workers, [&](std::size_t i) {
    const Graph& g = corpus[i];
    if (g.order() > 10) return;
    std::mt19937_64 rng(item_seed(cfg.seed, i, 7));
    GameSolver fast(g);
    GameSolver unpruned(g, SolverOptions{.prune = false, .bounds = false});
    std::vector<VertexSet> starts{VertexSet{}};
    for (int s = 0; s < cfg.state_samples; ++s) starts.push_back(random_subset(rng, g));
    for (VertexSet d : starts) {
      for (Mover m : {Mover::Dominator, Mover::Staller}) {
        ++items[i].checked;
        const int want = oracle_value(DominationState(g, d, m));
        const int got = fast.value(d, m);
        const int plain = unpruned.value(d, m);
        if (got != want || plain != want)
          items[i].failures.push_back(describe(g, d) + " " + to_string(m) + ": solver " +
                                      std::to_string(got) + " unpruned " + std::to_string(plain) +
                                      " oracle " + std::to_string(want));
      }
    }
  });
  return merge("oracle", items);
}

}  // namespace

Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (g.is_connected()) return g;
  }
}

std::vector<Graph> suite_corpus(const SuiteConfig& cfg) {
  std::vector<Graph> corpus;
  if (cfg.corpus_given) {
    corpus = cfg.corpus;
  } else {
    for (int n = 1; n <= std::min(cfg.n_max, 8); ++n) {
      auto level = connected_graphs(n);
      corpus.insert(corpus.end(), level.begin(), level.end());
    }
  }
  std::mt19937_64 rng(item_seed(cfg.seed, 0, 11));
  for (int i = 0; i < cfg.random_graphs; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, cfg.random_n - 1)));
    corpus.push_back(random_connected_graph(rng, n, 0.4));
  }
  return corpus;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg) {
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw ContractError("unknown suite " + n);
  auto wants = [&](const char* n) { return std::find(names.begin(), names.end(), n) != names.end(); };

  const bool need_corpus = wants("thm1") || wants("thm2") || wants("cp") || wants("prop5") ||
                           wants("residual") || wants("oracle");
  const std::vector<Graph> corpus = need_corpus ? suite_corpus(cfg) : std::vector<Graph>{};
  std::optional<TheoremOutcomes> thm;
  if (wants("thm1") || wants("thm2") || wants("cp")) thm = theorem_checks(corpus, cfg);

  std::vector<SuiteResult> out;
  for (const auto& name : names) {
    if (name == "thm1") out.push_back(merge("thm1", thm->thm1));
    else if (name == "thm2") out.push_back(merge("thm2", thm->thm2));
    else if (name == "cp") out.push_back(merge("cp", thm->cp));
    else if (name == "lemma3") out.push_back(lemma3_suite(cfg));
    else if (name == "lowerbound") out.push_back(lowerbound_suite(cfg));
    else if (name == "pairs") out.push_back(pairs_suite(cfg));
    else if (name == "prop5") out.push_back(prop5_suite(corpus, cfg));
    else if (name == "residual") out.push_back(residual_suite(corpus, cfg));
    else if (name == "oracle") out.push_back(oracle_suite(corpus, cfg));
  }
  return out;
}

}  // namespace domgame
