#pragma once

// JSON views of solver, census, and spanning results. Every top-level
// document carries "schema": 1.

#include <json.hpp>

#include "domgame/census.hpp"
#include "domgame/families.hpp"
#include "domgame/solver.hpp"
#include "domgame/spanning.hpp"

namespace domgame {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const VertexSet& s);
Json to_json(const SearchStats& s);
Json to_json(const MoveTrace& trace);
Json edges_json(const std::vector<Edge>& edges);

Json solve_json(const SolveResult& r, const MoveTrace* line);
Json labels_json(const LabeledGraph& g);
Json spanning_json(const SpanningReport& r);
Json prop9_json(const Prop9Report& r);
Json invariants_json(const InvariantReport& r);

}  // namespace domgame
