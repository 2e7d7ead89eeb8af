#include "domgame/json_io.hpp"

namespace domgame {

Json to_json(const VertexSet& s) {
  Json j = Json::array();
  for (Vertex v : s) j.push_back(v);
  return j;
}

Json to_json(const SearchStats& s) {
  Json j;
  j["nodes_expanded"] = s.nodes_expanded;
  j["memo_hits"] = s.memo_hits;
  j["max_table_size"] = s.max_table_size;
  return j;
}

Json to_json(const MoveTrace& trace) {
  Json j = Json::array();
  for (const auto& m : trace) {
    Json step;
    step["player"] = to_string(m.player);
    step["vertex"] = m.vertex;
    step["newly_dominated"] = m.newly_dominated;
    j.push_back(std::move(step));
  }
  return j;
}

Json edges_json(const std::vector<Edge>& edges) {
  Json j = Json::array();
  for (auto [u, v] : edges) j.push_back(Json::array({u, v}));
  return j;
}

Json solve_json(const SolveResult& r, const MoveTrace* line) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["value"] = r.value;
  j["optimal_first_moves"] = to_json(r.optimal_first_moves);
  j["stats"] = to_json(r.stats);
  if (line) j["line"] = to_json(*line);
  return j;
}

Json labels_json(const LabeledGraph& g) {
  Json j;
  for (const auto& [role, v] : g.labels) j[role] = v;
  return j;
}

namespace {

Json extreme_json(const TreeExtreme& e) {
  Json j;
  j["value"] = e.value;
  j["count"] = e.count;
  j["witness"] = edges_json(e.witness);
  return j;
}

}  // namespace

Json spanning_json(const SpanningReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["base"] = {{"gamma", r.gamma}, {"gamma_g", r.game}, {"gamma_g_staller", r.staller_game}};
  j["tree_count"] = r.tree_count;
  j["min_tree"] = extreme_json(r.min_tree);
  j["max_tree"] = extreme_json(r.max_tree);
  j["min_tree_gamma"] = r.min_tree_gamma;
  j["prop5_ok"] = r.prop5_ok;
  j["gamma_preserving_tree_exists"] = r.gamma_preserving_tree_exists;
  return j;
}

Json prop9_json(const Prop9Report& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["gamma_G"] = r.gamma_g;
  j["gamma_g_G"] = r.game_g;
  j["gamma_H"] = r.gamma_h;
  j["gamma_g_H"] = r.game_h;
  j["clause_i"] = to_string(r.clause_i);
  j["clause_ii"] = to_string(r.clause_ii);
  if (r.gamma_preserving_tree)
    j["gamma_preserving_tree"] = *r.gamma_preserving_tree;
  else
    j["gamma_preserving_tree"] = nullptr;
  j["ok"] = r.ok();
  return j;
}

Json invariants_json(const InvariantReport& r) {
  Json j;
  j["gamma"] = r.gamma;
  j["gamma_g"] = r.game;
  j["gamma_g_staller"] = r.staller_game;
  j["bound_chain"] = r.bound_chain;
  j["start_gap"] = r.start_gap;
  j["continuation"] = r.continuation;
  j["continuation_samples"] = r.continuation_samples;
  j["failures"] = r.failures;
  return j;
}

}  // namespace domgame
