#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "hubnet/compromise.hpp"
#include "hubnet/market.hpp"
#include "hubnet/scenario.hpp"
#include "hubnet/supply.hpp"

namespace hubnet {

// Everything cmd_solve prints. Tables mirror the module outputs; the
// renderers never recompute.
struct SolveReport {
    int vertex_count = 0;
    int edge_count = 0;
    int actor_count = 0;
    int64_t batch_heavy = 0;
    int64_t batch_light = 0;

    std::vector<VertexId> production_vertices;
    std::vector<VertexId> storage_vertices;
    std::vector<VertexId> buyer_vertices;
    std::vector<VertexId> candidate_vertices;

    MoneyMatrix production_to_storage;  // heavy route
    MoneyMatrix storage_to_candidate;   // light route
    MoneyMatrix buyer_to_candidate;     // buyer route

    SupplyPlan plan;
    PayoffMatrix payoff;
    CompromiseResult compromise;

    std::chrono::nanoseconds duration{0};
};

// validate -> APSP x3 -> supply plan -> payoff matrix -> compromise.
SolveReport solve_scenario(const Scenario& scn);

std::string render_text(const SolveReport& report, bool color);
nlohmann::json render_json(const SolveReport& report);  // deterministic; excludes duration

// APSP submatrix for one cost class, restricted to the given rows/columns.
struct ApspView {
    std::vector<VertexId> from;
    std::vector<VertexId> to;
    MoneyMatrix weights;  // finite on connected networks
};

ApspView apsp_view(const Scenario& scn, CostClass cls, std::vector<VertexId> from,
                   std::vector<VertexId> to);

std::string render_apsp_text(const ApspView& view);
nlohmann::json render_apsp_json(const ApspView& view);

}  // namespace hubnet
