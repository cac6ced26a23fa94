#include "hubnet/supply.hpp"

#include <optional>

namespace hubnet {

MissingMarginError::MissingMarginError(VertexId location)
    : std::runtime_error("no per-location margin for vertex " + std::to_string(location)),
      location_(location) {}

NoFeasibleChainError::NoFeasibleChainError(VertexId location)
    : std::runtime_error("no reachable supply chain for candidate location " + std::to_string(location)),
      location_(location) {}

const SupplyChoice& SupplyPlan::at(VertexId location) const {
    for (const SupplyChoice& choice : choices_)
        if (choice.location == location) return choice;
    throw std::out_of_range("no supply choice for vertex " + std::to_string(location));
}

namespace {

Rational base_cost_exact(Money l, Money s, Money c1, Money c2, int64_t q1, int64_t q2) {
    return Rational::of(l) + Rational::of(s) + Rational::of(c1).div_int(q1) + Rational::of(c2).div_int(q2);
}

Rational margin_exact(const Rational& base, const MarginPolicy& margin, VertexId location) {
    if (const auto* frac = std::get_if<FractionOfBase>(&margin)) return base * frac->mu;
    const auto& per = std::get<PerLocationMargin>(margin);
    auto it = per.amounts.find(location);
    if (it == per.amounts.end()) throw MissingMarginError(location);
    return Rational::of(it->second);
}

}  // namespace

Money amortized_leg_cost(PathWeight path_weight, int64_t batch) {
    if (!path_weight.reachable()) throw UnreachableLegError();
    return Rational::of(path_weight.money()).div_int(batch).to_money_half_up();
}

Money unit_price(Money l, Money s, Money c1, Money c2, int64_t q1, int64_t q2,
                 const MarginPolicy& margin, VertexId location) {
    Rational base = base_cost_exact(l, s, c1, c2, q1, q2);
    return (base + margin_exact(base, margin, location)).to_money_half_up();
}

SupplyPlan build_supply_plan(const Scenario& scn, const CostMatrix& apsp_heavy,
                             const CostMatrix& apsp_light) {
    const int64_t q1 = scn.batch_heavy();
    const int64_t q2 = scn.batch_light();

    std::vector<SupplyChoice> choices;
    choices.reserve(scn.candidate_locations().size());

    for (VertexId location : scn.candidate_locations()) {
        std::optional<Rational> best_base;
        SupplyChoice best;

        for (const ProductionHub& hub : scn.production_hubs()) {
            for (const Storage& storage : scn.storages()) {
                PathWeight heavy_leg = apsp_heavy.at(hub.vertex, storage.vertex);
                PathWeight light_leg = apsp_light.at(storage.vertex, location);
                if (!heavy_leg.reachable() || !light_leg.reachable()) continue;

                Rational base = base_cost_exact(hub.unit_price, storage.unit_fee, heavy_leg.money(),
                                                light_leg.money(), q1, q2);
                if (!best_base || base < *best_base) {
                    best_base = base;
                    best.location = location;
                    best.production_vertex = hub.vertex;
                    best.storage_vertex = storage.vertex;
                    best.c1 = heavy_leg.money();
                    best.c2 = light_leg.money();
                }
            }
        }
        if (!best_base) throw NoFeasibleChainError(location);

        Rational price = *best_base + margin_exact(*best_base, scn.margin(), location);
        best.base_cost = best_base->to_money_half_up();
        best.unit_price = price.to_money_half_up();
        best.margin = best.unit_price - best.base_cost;
        choices.push_back(best);
    }
    return SupplyPlan(std::move(choices));
}

}  // namespace hubnet
