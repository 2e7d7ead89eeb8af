#include "domgame/census.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "domgame/errors.hpp"
#include "domgame/solver.hpp"
#include "domgame/trees.hpp"
#include "parallel.hpp"

namespace domgame {

std::vector<GameProfile> profile_graphs(std::vector<Graph> graphs, int workers,
                                        const SolverOptions& solver) {
  std::vector<GameProfile> out(graphs.size());
  detail::parallel_for(graphs.size(), workers, [&](std::size_t i) {
    auto [gg, ggp] = gamma_pair(graphs[i], solver);
    out[i] = {std::move(graphs[i]), gg, ggp};
  });
  return out;
}

std::vector<CensusRecord> tally(const std::vector<GameProfile>& profiles, int witness_cap) {
  std::map<std::tuple<int, int, int>, CensusRecord> groups;
  for (const auto& p : profiles) {
    auto& rec = groups[{p.graph.order(), p.gg, p.ggp}];
    rec.n = p.graph.order();
    rec.gg = p.gg;
    rec.ggp = p.ggp;
    ++rec.count;
    if (static_cast<int>(rec.witnesses.size()) < witness_cap)
      rec.witnesses.push_back(emit_graph6(p.graph));
  }
  std::vector<CensusRecord> out;
  for (auto& [key, rec] : groups) out.push_back(std::move(rec));
  return out;
}

namespace {

void check_guard(int n, const CensusOptions& opt) {
  if (n > opt.order_guard && !opt.override_guard)
    throw ResourceGuardError("census order " + std::to_string(n) + " exceeds guard " +
                             std::to_string(opt.order_guard) + " (pass the override flag)");
}

std::vector<GameProfile> profile_trees(int n, const CensusOptions& opt) {
  return profile_graphs(enumerate_trees(n), opt.workers, opt.solver);
}

}  // namespace

std::vector<CensusRecord> pair_census(int n, const CensusOptions& options) {
  check_guard(n, options);
  return tally(profile_trees(n, options), options.witness_cap);
}

ConjectureReport conjecture_check(int n_max, const CensusOptions& options) {
  ConjectureReport rep;
  for (int n = 1; n <= n_max; ++n) {
    check_guard(n, options);
    for (const auto& p : profile_trees(n, options)) {
      ++rep.trees_scanned;
      if (p.ggp == p.gg - 1) {
        rep.clean = false;
        rep.counterexamples.push_back({n, emit_graph6(p.graph), p.gg, p.ggp});
      }
    }
  }
  return rep;
}

int tree_lower_bound(int n, int max_degree) {
  const int d = max_degree + 3;
  return (2 * n + d - 1) / d - 1;
}

LowerBoundReport lower_bound_check(int n, const CensusOptions& options) {
  check_guard(n, options);
  LowerBoundReport rep;
  for (const auto& p : profile_trees(n, options)) {
    ++rep.trees_checked;
    const int delta = p.graph.max_degree();
    const int bound = tree_lower_bound(n, delta);
    if (p.gg < bound) rep.violations.push_back({emit_graph6(p.graph), n, delta, bound, p.gg});
  }
  return rep;
}

// -- persistence -------------------------------------------------------------

std::string to_jsonl(const std::vector<CensusRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["gg"] = r.gg;
    j["ggp"] = r.ggp;
    j["count"] = r.count;
    j["witnesses"] = r.witnesses;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<CensusRecord> parse_jsonl(const std::string& text) {
  std::vector<CensusRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    CensusRecord r;
    r.n = j.at("n").get<int>();
    r.gg = j.at("gg").get<int>();
    r.ggp = j.at("ggp").get<int>();
    r.count = j.at("count").get<std::uint64_t>();
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    out.push_back(std::move(r));
  }
  return out;
}

std::filesystem::path manifest_path(const std::filesystem::path& out) {
  return std::filesystem::path(out.string() + ".manifest");
}

std::vector<int> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) return {};
  const auto j = nlohmann::json::parse(in);
  return j.at("completed").get<std::vector<int>>();
}

namespace {

void write_manifest(const std::filesystem::path& manifest, const std::vector<int>& done) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["completed"] = done;
  const auto tmp = std::filesystem::path(manifest.string() + ".tmp");
  {
    std::ofstream os(tmp, std::ios::trunc);
    os << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, manifest);
}

}  // namespace

CensusRun run_census(int max_n, const std::filesystem::path& out, bool resume,
                     const CensusOptions& options) {
  for (int n = 1; n <= max_n; ++n) check_guard(n, options);
  const auto manifest = manifest_path(out);
  std::vector<int> done = resume ? read_manifest(manifest) : std::vector<int>{};
  if (!resume) {
    std::ofstream(out, std::ios::trunc);
    write_manifest(manifest, done);
  } else {
    // Drop records of an order that was interrupted before its manifest entry.
    std::string existing;
    if (std::ifstream in(out); in) existing.assign(std::istreambuf_iterator<char>(in), {});
    std::vector<CensusRecord> kept;
    for (auto& r : parse_jsonl(existing))
      if (std::find(done.begin(), done.end(), r.n) != done.end()) kept.push_back(std::move(r));
    std::ofstream(out, std::ios::trunc) << to_jsonl(kept);
  }
  CensusRun run;
  for (int n = 1; n <= max_n; ++n) {
    if (std::find(done.begin(), done.end(), n) != done.end()) {
      run.skipped.push_back(n);
      continue;
    }
    const auto records = pair_census(n, options);
    {
      std::ofstream os(out, std::ios::app);
      os << to_jsonl(records);
    }
    done.push_back(n);
    write_manifest(manifest, done);
    run.computed.push_back(n);
  }
  return run;
}

}  // namespace domgame
