#pragma once

#include <optional>
#include <vector>

#include "hubnet/money.hpp"
#include "hubnet/network.hpp"

namespace hubnet::testing {

// Minimum simple-path weight between every vertex pair by exhaustive DFS
// enumeration. No pruning, no shared state with the Floyd-Warshall path.
// Only for tiny graphs; throws above 10 vertices.
std::vector<std::vector<std::optional<int64_t>>> brute_force_apsp(const Network& net, CostClass cls);

// Independent compromise oracle: sort every column descending and return
// all columns whose sorted vector is lexicographically minimal.
std::vector<int> lexicographic_minimax(const MoneyMatrix& beta);

}  // namespace hubnet::testing
