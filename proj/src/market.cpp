#include "hubnet/market.hpp"

#include <algorithm>

namespace hubnet {

std::vector<Profile> enumerate_profiles(std::vector<VertexId> candidates, int actor_count) {
    std::sort(candidates.begin(), candidates.end());
    const int c = static_cast<int>(candidates.size());
    if (actor_count < 0 || actor_count > c)
        throw std::invalid_argument("actor count exceeds candidate count");

    std::vector<Profile> profiles;
    std::vector<int> pick(actor_count);
    for (int i = 0; i < actor_count; ++i) pick[i] = i;
    while (true) {
        Profile p;
        p.hubs.reserve(actor_count);
        for (int i : pick) p.hubs.push_back(candidates[i]);
        profiles.push_back(std::move(p));

        int slot = actor_count - 1;
        while (slot >= 0 && pick[slot] == c - actor_count + slot) --slot;
        if (slot < 0) break;
        ++pick[slot];
        for (int i = slot + 1; i < actor_count; ++i) pick[i] = pick[i - 1] + 1;
    }
    return profiles;
}

BuyerAssignment buyer_choice(const Buyer& buyer, const Profile& profile, const SupplyPlan& prices,
                             const CostMatrix& apsp_buyer) {
    if (profile.hubs.empty()) throw std::invalid_argument("profile without hubs");

    BuyerAssignment best;
    best.buyer_vertex = buyer.vertex;
    best.demand = buyer.demand;
    bool first = true;
    for (VertexId hub : profile.hubs) {  // ascending, so first strict minimum keeps the smallest id
        Money purchase = prices.price_at(hub) * buyer.demand;
        Money travel = apsp_buyer.at(buyer.vertex, hub).money();
        Money total = purchase + travel;
        if (first || total < best.total) {
            first = false;
            best.chosen_hub = hub;
            best.purchase_cost = purchase;
            best.travel_cost = travel;
            best.total = total;
        }
    }
    return best;
}

PayoffMatrix::PayoffMatrix(int actor_count, std::vector<Profile> profiles)
    : profiles_(std::move(profiles)),
      gamma_(actor_count, static_cast<int>(profiles_.size())),
      assignments_(profiles_.size()) {}

namespace {

void fill_column(PayoffMatrix& out, int q, std::span<const Buyer> buyers, const SupplyPlan& plan,
                 const CostMatrix& apsp_buyer) {
    const Profile& profile = out.profiles()[q];
    auto& column_assignments = out.assignments(q);
    column_assignments.reserve(buyers.size());
    for (const Buyer& buyer : buyers) {
        BuyerAssignment a = buyer_choice(buyer, profile, plan, apsp_buyer);
        auto owner = std::find(profile.hubs.begin(), profile.hubs.end(), a.chosen_hub);
        int actor = static_cast<int>(owner - profile.hubs.begin());
        out.at(actor, q) += a.purchase_cost;
        column_assignments.push_back(std::move(a));
    }
}

}  // namespace

PayoffMatrix payoff_from_components(std::span<const Buyer> buyers, int actor_count,
                                    std::vector<Profile> profiles, const SupplyPlan& plan,
                                    const CostMatrix& apsp_buyer) {
    PayoffMatrix out(actor_count, std::move(profiles));
    const int cols = out.profile_index_count();
    std::exception_ptr failure;  // exceptions must not unwind out of the parallel region
#pragma omp parallel for schedule(dynamic)
    for (int q = 0; q < cols; ++q) {
        try {
            fill_column(out, q, buyers, plan, apsp_buyer);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

PayoffMatrix build_payoff_matrix(const Scenario& scn, const SupplyPlan& plan,
                                 const CostMatrix& apsp_buyer) {
    return payoff_from_components(scn.buyers(), scn.actor_count(),
                                  enumerate_profiles(scn.candidate_locations(), scn.actor_count()), plan,
                                  apsp_buyer);
}

namespace reference {

PayoffMatrix payoff_from_components(std::span<const Buyer> buyers, int actor_count,
                                    std::vector<Profile> profiles, const SupplyPlan& plan,
                                    const CostMatrix& apsp_buyer) {
    PayoffMatrix out(actor_count, std::move(profiles));
    for (int q = 0; q < out.profile_index_count(); ++q) fill_column(out, q, buyers, plan, apsp_buyer);
    return out;
}

}  // namespace reference

}  // namespace hubnet
