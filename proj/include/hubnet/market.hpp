#pragma once

#include <span>
#include <vector>

#include "hubnet/money.hpp"
#include "hubnet/network.hpp"
#include "hubnet/scenario.hpp"
#include "hubnet/supply.hpp"

namespace hubnet {

// One placement of the actors' hubs; actor k owns hubs[k] of the
// ascending combination.
struct Profile {
    std::vector<VertexId> hubs;
    bool operator==(const Profile&) const = default;
};

// All C(|candidates|, actor_count) ascending combinations in lexicographic
// order of vertex ids.
std::vector<Profile> enumerate_profiles(std::vector<VertexId> candidates, int actor_count);

struct BuyerAssignment {
    VertexId buyer_vertex = 0;
    int64_t demand = 0;
    VertexId chosen_hub = 0;
    Money purchase_cost;  // demand * unit price
    Money travel_cost;
    Money total;
    bool operator==(const BuyerAssignment&) const = default;
};

// Hub minimizing demand * price + travel; ties go to the smallest hub id.
BuyerAssignment buyer_choice(const Buyer& buyer, const Profile& profile, const SupplyPlan& prices,
                             const CostMatrix& apsp_buyer);

class PayoffMatrix {
public:
    PayoffMatrix() = default;
    PayoffMatrix(int actor_count, std::vector<Profile> profiles);

    int actor_count() const { return gamma_.rows(); }
    int profile_index_count() const { return gamma_.cols(); }
    const std::vector<Profile>& profiles() const { return profiles_; }

    Money at(int actor, int profile) const { return gamma_.at(actor, profile); }
    Money& at(int actor, int profile) { return gamma_.at(actor, profile); }
    const MoneyMatrix& matrix() const { return gamma_; }

    const std::vector<BuyerAssignment>& assignments(int profile) const { return assignments_.at(profile); }
    std::vector<BuyerAssignment>& assignments(int profile) { return assignments_.at(profile); }

    bool operator==(const PayoffMatrix&) const = default;

private:
    std::vector<Profile> profiles_;
    MoneyMatrix gamma_;
    std::vector<std::vector<BuyerAssignment>> assignments_;
};

// Each profile column is independent; computed in parallel across columns.
PayoffMatrix build_payoff_matrix(const Scenario& scn, const SupplyPlan& plan,
                                 const CostMatrix& apsp_buyer);

// Column-by-column assembly from explicit parts; also usable with an empty
// buyer list.
PayoffMatrix payoff_from_components(std::span<const Buyer> buyers, int actor_count,
                                    std::vector<Profile> profiles, const SupplyPlan& plan,
                                    const CostMatrix& apsp_buyer);

namespace reference {
// Serial baseline for the parallel column loop.
PayoffMatrix payoff_from_components(std::span<const Buyer> buyers, int actor_count,
                                    std::vector<Profile> profiles, const SupplyPlan& plan,
                                    const CostMatrix& apsp_buyer);
}  // namespace reference

}  // namespace hubnet
