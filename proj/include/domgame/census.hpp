#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "domgame/graph.hpp"
#include "domgame/solver.hpp"

namespace domgame {

struct CensusRecord {
  int n = 0;
  int gg = 0;   // gamma_g
  int ggp = 0;  // gamma_g'
  std::uint64_t count = 0;
  std::vector<std::string> witnesses;  // graph6, first ones in enumeration order

  bool operator==(const CensusRecord&) const = default;
};

struct CensusOptions {
  int workers = 1;
  int witness_cap = 4;
  int order_guard = 16;
  bool override_guard = false;
  SolverOptions solver;
};

/// One solved graph.
struct GameProfile {
  Graph graph;
  int gg = 0;
  int ggp = 0;
};

/// Solves (gamma_g, gamma_g') for every graph on a worker pool. Output order
/// matches input order whatever the worker count.
std::vector<GameProfile> profile_graphs(std::vector<Graph> graphs, int workers,
                                        const SolverOptions& solver = {});

/// Groups profiles by (n, gg, ggp); records sorted by that key.
std::vector<CensusRecord> tally(const std::vector<GameProfile>& profiles, int witness_cap);

/// Full (gamma_g, gamma_g') classification of the free trees of order n.
/// Throws ResourceGuardError above the order guard unless overridden.
std::vector<CensusRecord> pair_census(int n, const CensusOptions& options = {});

struct Counterexample {
  int n = 0;
  std::string graph6;
  int gg = 0;
  int ggp = 0;
};

struct ConjectureReport {
  bool clean = true;
  std::vector<Counterexample> counterexamples;
  std::uint64_t trees_scanned = 0;
};

/// Scans all trees of order <= n_max for gamma_g' = gamma_g - 1.
ConjectureReport conjecture_check(int n_max, const CensusOptions& options = {});

struct BoundViolation {
  std::string graph6;
  int n = 0;
  int max_degree = 0;
  int bound = 0;
  int gg = 0;
};

struct LowerBoundReport {
  std::vector<BoundViolation> violations;
  std::uint64_t trees_checked = 0;
};

/// ceil(2n / (max_degree + 3)) - 1.
int tree_lower_bound(int n, int max_degree);

/// Checks gamma_g(T) >= tree_lower_bound for every tree of order n.
LowerBoundReport lower_bound_check(int n, const CensusOptions& options = {});

// -- persistence -------------------------------------------------------------

std::string to_jsonl(const std::vector<CensusRecord>& records);
std::vector<CensusRecord> parse_jsonl(const std::string& text);

/// Append-only census run over orders 1..max_n. Records go to `out`; the
/// completed orders are listed in `out` + ".manifest". With `resume`, orders
/// already in the manifest are skipped.
struct CensusRun {
  std::vector<int> computed;
  std::vector<int> skipped;
};

CensusRun run_census(int max_n, const std::filesystem::path& out, bool resume,
                     const CensusOptions& options);

std::filesystem::path manifest_path(const std::filesystem::path& out);
std::vector<int> read_manifest(const std::filesystem::path& manifest);

}  // namespace domgame
