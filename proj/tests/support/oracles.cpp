#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hubnet::testing {

std::vector<std::vector<std::optional<int64_t>>> brute_force_apsp(const Network& net, CostClass cls) {
    const int n = net.vertex_count();
    if (n > 10) throw std::invalid_argument("brute-force oracle only handles tiny graphs");

    std::vector<std::vector<std::pair<int, int64_t>>> adjacency(n);
    for (const Edge& e : net.edges()) {
        int64_t w = 0;
        switch (cls) {
            case CostClass::ActorHeavy: w = e.cost_heavy.minor(); break;
            case CostClass::ActorLight: w = e.cost_light.minor(); break;
            case CostClass::Buyer: w = e.cost_buyer.minor(); break;
        }
        adjacency[e.u].push_back({e.v, w});
        adjacency[e.v].push_back({e.u, w});
    }

    std::vector<std::vector<std::optional<int64_t>>> best(
        n, std::vector<std::optional<int64_t>>(n));
    for (int s = 0; s < n; ++s) {
        best[s][s] = 0;
        std::vector<char> on_path(n, 0);
        on_path[s] = 1;
        std::function<void(int, int64_t)> walk = [&](int v, int64_t cost) {
            for (auto [w, weight] : adjacency[v]) {
                if (on_path[w]) continue;
                int64_t reached = cost + weight;
                if (!best[s][w] || reached < *best[s][w]) best[s][w] = reached;
                on_path[w] = 1;
                walk(w, reached);
                on_path[w] = 0;
            }
        };
        walk(s, 0);
    }
    return best;
}

std::vector<int> lexicographic_minimax(const MoneyMatrix& beta) {
    std::vector<std::vector<Money>> columns(beta.cols());
    for (int c = 0; c < beta.cols(); ++c) {
        for (int r = 0; r < beta.rows(); ++r) columns[c].push_back(beta.at(r, c));
        std::sort(columns[c].begin(), columns[c].end(), std::greater<Money>());
    }

    int best = 0;
    for (int c = 1; c < beta.cols(); ++c)
        if (std::lexicographical_compare(columns[c].begin(), columns[c].end(), columns[best].begin(),
                                         columns[best].end()))
            best = c;

    std::vector<int> winners;
    for (int c = 0; c < beta.cols(); ++c)
        if (columns[c] == columns[best]) winners.push_back(c);
    return winners;
}

}  // namespace hubnet::testing
