// domgame: command-line front end.
//
//   domgame solve    --graph <file|g6:STR> [--variant dominator|staller] [--dominated LIST]
//   domgame family   <name> [--r|--s|--t|--m|--n|--k INT] [--emit g6|edges] [--which G|H]
//   domgame census   --max-n N [--jobs K] [--out FILE] [--resume]
//   domgame spanning --graph <file|g6:STR> | --pair-family NAME [params]
//   domgame verify   --suite LIST --n-max N --seed S
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 resource guard tripped.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "domgame/census.hpp"
#include "domgame/errors.hpp"
#include "domgame/families.hpp"
#include "domgame/json_io.hpp"
#include "domgame/spanning.hpp"
#include "domgame/suites.hpp"

using namespace domgame;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kGuard = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0 || v > 63) throw UsageError("bad vertex '" + item + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

struct LoadedGraph {
  Graph graph;
  std::optional<std::vector<Vertex>> dominated;  // from a "# dominated" line
};

// A file holds either an edge list or one graph6 line. '#' lines are comments;
// they are blanked rather than removed so parse errors keep their line numbers.
LoadedGraph load_graph(const std::string& source) {
  if (source.starts_with("g6:")) return {parse_graph6(source.substr(3)), std::nullopt};
  const std::string text = read_file(source);
  LoadedGraph out{Graph(0, {}), std::nullopt};
  std::string body;
  std::istringstream in(text);
  std::string line;
  bool edge_list = false, seen_content = false;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) {
      if (line.starts_with("# dominated")) out.dominated = parse_vertex_list(line.substr(11));
      body += '\n';
      continue;
    }
    if (!seen_content && line.find_first_not_of(" \t\r") != std::string::npos) {
      seen_content = true;
      edge_list = line.find_first_of("0123456789") != std::string::npos;
    }
    body += line;
    body += '\n';
  }
  if (!seen_content) throw ParseError("empty graph file", 1);
  if (edge_list) {
    out.graph = parse_edge_list(body);
  } else {
    auto graphs = parse_graph6_stream(body);
    if (graphs.size() != 1) throw UsageError("expected exactly one graph6 line in " + source);
    out.graph = std::move(graphs.front());
  }
  return out;
}

SolverOptions solver_options_from_env() {
  SolverOptions opt;
  if (const char* cap = std::getenv("DOMGAME_MEMO_CAP"); cap && *cap) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (*end != '\0') throw UsageError("DOMGAME_MEMO_CAP must be a non-negative integer");
    opt.memo_cap = static_cast<std::size_t>(v);
  }
  return opt;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json value_json(const Graph& g, const SolverOptions& opt) {
  const auto [gg, ggp] = gamma_pair(g, opt);
  Json j;
  j["order"] = g.order();
  j["size"] = g.size();
  j["gamma"] = domination_number(g);
  j["gamma_g"] = gg;
  j["gamma_g_staller"] = ggp;
  return j;
}

struct ParamFlags {
  FamilyParams p;
  void attach(CLI::App* app) {
    app->add_option("--r", p.r, "gadget count");
    app->add_option("--s", p.s, "caterpillar leaves per spine vertex");
    app->add_option("--t", p.t, "caterpillar spine length / houses count");
    app->add_option("--m", p.m, "layered3conn / starclique size");
    app->add_option("--n", p.n, "starclique clique order");
    app->add_option("--k", p.k, "web size");
  }
};

// -- subcommands -------------------------------------------------------------

struct SolveArgs {
  std::string graph, variant = "dominator", dominated;
  bool exact_front = false, line = false;
  int root_split = 0;
};

int run_solve(const SolveArgs& a) {
  LoadedGraph in = load_graph(a.graph);
  SolverOptions opt = solver_options_from_env();
  opt.exact_front = a.exact_front;
  const Mover mover = a.variant == "staller" ? Mover::Staller : Mover::Dominator;
  VertexSet dominated;
  const auto list = a.dominated.empty() ? in.dominated.value_or(std::vector<Vertex>{})
                                        : parse_vertex_list(a.dominated);
  for (Vertex v : list) {
    if (v >= in.graph.order()) throw UsageError("dominated vertex " + std::to_string(v) + " out of range");
    dominated.insert(v);
  }
  const DominationState state(in.graph, dominated, mover);
  if (a.root_split > 0) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["value"] = root_split_value(state, a.root_split, opt);
    print(j);
    return kOk;
  }
  GameSolver solver(in.graph, opt);
  const SolveResult r = solver.solve(dominated, mover);
  MoveTrace line;
  if (a.line) line = solver.optimal_line(dominated, mover);
  print(solve_json(r, a.line ? &line : nullptr));
  return kOk;
}

struct FamilyArgs {
  std::string name, emit = "g6", which = "G";
  ParamFlags params;
};

void emit_graph(const Graph& g, const std::string& emit) {
  if (emit == "edges")
    std::cout << emit_edge_list(g);
  else
    std::cout << emit_graph6(g) << '\n';
}

int run_family(const FamilyArgs& a) {
  if (a.name == "P3'" || a.name == "P5'" || a.name == "F") {
    const PartialFixture f = make_partial_fixture(a.name);
    emit_graph(f.state.graph, a.emit);
    Json labels;
    for (const auto& [role, v] : f.labels) labels[role] = v;
    std::cout << "# labels " << labels.dump() << '\n';
    std::string d;
    for (Vertex v : f.state.dominated) d += (d.empty() ? "" : ",") + std::to_string(v);
    std::cout << "# dominated " << d << '\n';
    return kOk;
  }
  LabeledGraph g;
  if (is_tree_family(a.name)) {
    g = make_tree_family(a.name, a.params.p);
  } else if (is_spanning_family(a.name)) {
    auto [G, H] = make_spanning_pair(a.name, a.params.p);
    g = a.which == "H" ? std::move(H) : std::move(G);
  } else {
    throw UsageError("unknown family " + a.name);
  }
  emit_graph(g.graph, a.emit);
  std::cout << "# labels " << labels_json(g).dump() << '\n';
  return kOk;
}

struct CensusArgs {
  int max_n = 0, jobs = 1;
  std::string out, input;
  bool resume = false, override_guard = false;
};

int run_census_cmd(const CensusArgs& a) {
  CensusOptions opt;
  opt.workers = a.jobs;
  opt.override_guard = a.override_guard;
  opt.solver = solver_options_from_env();
  if (!a.input.empty()) {
    auto graphs = parse_graph6_stream(read_file(a.input));
    std::cout << to_jsonl(tally(profile_graphs(std::move(graphs), a.jobs, opt.solver), opt.witness_cap));
    return kOk;
  }
  if (a.max_n < 1) throw UsageError("--max-n must be at least 1");
  if (a.max_n > opt.order_guard && !opt.override_guard)
    throw ResourceGuardError("census order " + std::to_string(a.max_n) + " exceeds guard " +
                             std::to_string(opt.order_guard) + " (pass --override-guard)");
  if (a.out.empty()) {
    if (a.resume) throw UsageError("--resume needs --out");
    for (int n = 1; n <= a.max_n; ++n) std::cout << to_jsonl(pair_census(n, opt));
    return kOk;
  }
  const CensusRun run = run_census(a.max_n, a.out, a.resume, opt);
  Json j;
  j["schema"] = kSchemaVersion;
  j["out"] = a.out;
  j["manifest"] = manifest_path(a.out).string();
  j["computed"] = run.computed;
  j["skipped"] = run.skipped;
  print(j);
  return kOk;
}

struct SpanningArgs {
  std::string graph, pair_family;
  ParamFlags params;
  std::uint64_t cap = kDefaultTreeCap;
  int jobs = 1;
};

int run_spanning(const SpanningArgs& a) {
  SpanningOptions opt;
  opt.cap = a.cap;
  opt.workers = a.jobs;
  opt.solver = solver_options_from_env();
  if (a.graph.empty() == a.pair_family.empty())
    throw UsageError("spanning needs exactly one of --graph, --pair-family");
  if (!a.graph.empty()) {
    print(spanning_json(spanning_extremes(load_graph(a.graph).graph, opt)));
    return kOk;
  }
  auto [G, H] = make_spanning_pair(a.pair_family, a.params.p);
  Json j;
  j["schema"] = kSchemaVersion;
  j["family"] = G.family;
  j["params"] = G.params;
  j["G"] = value_json(G.graph, opt.solver);
  j["H"] = value_json(H.graph, opt.solver);
  j["prop9"] = prop9_json(verify_prop9(G.graph, H.graph, a.cap));
  try {
    Json s = spanning_json(spanning_extremes(G.graph, opt));
    s.erase("schema");
    j["spanning"] = std::move(s);
  } catch (const ResourceGuardError& e) {
    j["spanning"] = nullptr;
    j["spanning_skipped"] = e.what();
  }
  print(j);
  return j["prop9"]["ok"].get<bool>() ? kOk : kVerifyFailed;
}

struct VerifyArgs {
  std::string suites, graphs;
  int n_max = 7, samples = 200, state_samples = 2, random_graphs = 0, random_n = 9, jobs = 1;
  std::uint64_t seed = 1;
};

int run_verify(const VerifyArgs& a) {
  SuiteConfig cfg;
  cfg.n_max = a.n_max;
  cfg.seed = a.seed;
  cfg.samples = a.samples;
  cfg.state_samples = a.state_samples;
  cfg.random_graphs = a.random_graphs;
  cfg.random_n = a.random_n;
  cfg.workers = a.jobs;
  if (!a.graphs.empty()) {
    cfg.corpus_given = true;
    cfg.corpus = parse_graph6_stream(read_file(a.graphs));
  }
  std::vector<std::string> names;
  std::istringstream in(a.suites);
  for (std::string s; std::getline(in, s, ',');)
    if (!s.empty()) names.push_back(s);
  if (names.empty()) throw UsageError("--suite needs at least one name");
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw UsageError("unknown suite " + n);

  bool all = true;
  Json j;
  j["schema"] = kSchemaVersion;
  j["seed"] = a.seed;
  j["n_max"] = a.n_max;
  j["suites"] = Json::array();
  for (const auto& r : run_suites(names, cfg)) {
    all = all && r.pass;
    Json s;
    s["name"] = r.name;
    s["pass"] = r.pass;
    s["checked"] = r.checked;
    s["failures"] = r.failures;
    j["suites"].push_back(std::move(s));
  }
  j["pass"] = all;
  print(j);
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination game solver and census tool"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "game value of a (partially dominated) graph");
  s->add_option("--graph", solve.graph, "edge-list or graph6 file, or g6:STRING")->required();
  s->add_option("--variant", solve.variant)->check(CLI::IsMember({"dominator", "staller"}));
  s->add_option("--dominated", solve.dominated, "comma-separated 0-indexed vertices");
  s->add_flag("--exact-front", solve.exact_front, "optimal first moves over unpruned moves");
  s->add_flag("--line", solve.line, "include one optimal game");
  s->add_option("--root-split", solve.root_split, "evaluate root moves on K threads")
      ->check(CLI::PositiveNumber);

  FamilyArgs family;
  auto* f = app.add_subcommand("family", "generate a family member");
  f->add_option("name", family.name)->required();
  family.params.attach(f);
  f->add_option("--emit", family.emit)->check(CLI::IsMember({"g6", "edges"}));
  f->add_option("--which", family.which)->check(CLI::IsMember({"G", "H"}));

  CensusArgs census;
  auto* c = app.add_subcommand("census", "(gamma_g, gamma_g') classification of trees");
  c->add_option("--max-n", census.max_n);
  c->add_option("--jobs", census.jobs)->check(CLI::PositiveNumber);
  c->add_option("--out", census.out, "JSONL output; a manifest is kept next to it");
  c->add_flag("--resume", census.resume);
  c->add_flag("--override-guard", census.override_guard);
  c->add_option("--input", census.input, "classify a graph6 stream instead of trees");

  SpanningArgs span;
  auto* sp = app.add_subcommand("spanning", "spanning-tree extremes");
  auto* sg = sp->add_option("--graph", span.graph);
  auto* pf = sp->add_option("--pair-family", span.pair_family)
                 ->check(CLI::IsMember({"houses", "layered3conn", "starclique", "web", "fig6"}));
  sg->excludes(pf);
  span.params.attach(sp);
  sp->add_option("--cap", span.cap, "spanning tree cap");
  sp->add_option("--jobs", span.jobs)->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run verification suites");
  v->add_option("--suite", verify.suites)->required();
  v->add_option("--n-max", verify.n_max);
  v->add_option("--seed", verify.seed);
  v->add_option("--samples", verify.samples);
  v->add_option("--state-samples", verify.state_samples);
  v->add_option("--random-graphs", verify.random_graphs);
  v->add_option("--random-n", verify.random_n);
  v->add_option("--graphs", verify.graphs, "graph6 corpus replacing the exhaustive one");
  v->add_option("--jobs", verify.jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*s) return run_solve(solve);
    if (*f) return run_family(family);
    if (*c) return run_census_cmd(census);
    if (*sp) return run_spanning(span);
    if (*v) return run_verify(verify);
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kGuard;
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error at byte " << e.offset() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
