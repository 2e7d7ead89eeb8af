#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// Checks run by `domgame verify`. Each suite walks a graph corpus (or the
/// tree census) and records a failure for every violated statement. All of
/// them are proven facts, so any failure is a bug.
struct SuiteConfig {
  int n_max = 7;
  std::uint64_t seed = 1;
  int samples = 200;           // Continuation Principle pairs per graph
  int state_samples = 2;       // random partial states per graph (residual, oracle, lemma3)
  int random_graphs = 0;       // seeded random connected graphs added to the corpus
  int random_n = 9;            // their maximum order
  int workers = 1;
  bool corpus_given = false;   // use `corpus` instead of the exhaustive connected graphs
  std::vector<Graph> corpus;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::vector<std::string> failures;  // first few, for the report
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm1",  "thm2",   "cp",       "lemma3", "lowerbound",
                                              "pairs", "prop5", "residual", "oracle"};
  return names;
}

/// Connected graph of order n drawn with edge probability p, resampled until
/// connected. Deterministic in the generator state.
Graph random_connected_graph(std::mt19937_64& rng, int n, double p);

/// The exhaustive connected graphs of order <= min(n_max, 8) (or the given
/// corpus) followed by the seeded random graphs.
std::vector<Graph> suite_corpus(const SuiteConfig& config);

/// Throws ContractError for an unknown suite name.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const SuiteConfig& config);

}  // namespace domgame
