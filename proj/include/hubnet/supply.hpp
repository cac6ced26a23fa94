#pragma once

#include <vector>

#include "hubnet/money.hpp"
#include "hubnet/network.hpp"
#include "hubnet/scenario.hpp"

namespace hubnet {

class UnreachableLegError : public std::runtime_error {
public:
    UnreachableLegError() : std::runtime_error("leg has no path") {}
};

class MissingMarginError : public std::runtime_error {
public:
    explicit MissingMarginError(VertexId location);
    VertexId location() const { return location_; }

private:
    VertexId location_;
};

class NoFeasibleChainError : public std::runtime_error {
public:
    explicit NoFeasibleChainError(VertexId location);
    VertexId location() const { return location_; }

private:
    VertexId location_;
};

// Cost-minimal supply chain for one candidate location.
struct SupplyChoice {
    VertexId location = 0;
    VertexId production_vertex = 0;
    VertexId storage_vertex = 0;
    Money c1;         // heavy-route path weight production -> storage
    Money c2;         // light-route path weight storage -> location
    Money base_cost;  // l + s + c1/Q1 + c2/Q2
    Money margin;
    Money unit_price;  // base_cost + margin, rounded once at the end
    bool operator==(const SupplyChoice&) const = default;
};

class SupplyPlan {
public:
    SupplyPlan() = default;
    explicit SupplyPlan(std::vector<SupplyChoice> choices) : choices_(std::move(choices)) {}

    const std::vector<SupplyChoice>& choices() const { return choices_; }
    const SupplyChoice& at(VertexId location) const;  // throws std::out_of_range
    Money price_at(VertexId location) const { return at(location).unit_price; }

    bool operator==(const SupplyPlan&) const = default;

private:
    std::vector<SupplyChoice> choices_;
};

// Per-unit transport cost of one leg: path weight divided by the batch
// size, exact when representable and half-up at the 4th digit otherwise.
Money amortized_leg_cost(PathWeight path_weight, int64_t batch);

Money unit_price(Money l, Money s, Money c1, Money c2, int64_t q1, int64_t q2,
                 const MarginPolicy& margin, VertexId location);

// Evaluates every (production hub, storage) pair per candidate location and
// keeps the base-cost arg-min; ties go to the smallest (hub index, storage
// index). Comparisons use exact rationals; prices round only at the end.
SupplyPlan build_supply_plan(const Scenario& scn, const CostMatrix& apsp_heavy,
                             const CostMatrix& apsp_light);

}  // namespace hubnet
