#pragma once

#include <random>
#include <vector>

#include "hubnet/network.hpp"
#include "hubnet/scenario.hpp"

namespace hubnet::testing {

class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    // Uniform in [lo, hi].
    int64_t between(int64_t lo, int64_t hi) {
        return std::uniform_int_distribution<int64_t>(lo, hi)(engine_);
    }
    int below(int n) { return static_cast<int>(between(0, n - 1)); }
    bool coin() { return between(0, 1) == 1; }
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

// Connected undirected network: random spanning tree plus extra edges.
// Weights are whole units in [0, max_units], with heavy >= light.
Network random_connected_network(Rng& rng, int vertex_count, int max_units);

// Valid random scenario over a small random network.
Scenario random_scenario(Rng& rng);

// Nonnegative residual matrix with whole-unit entries in [0, max_units].
MoneyMatrix random_residuals(Rng& rng, int rows, int cols, int max_units);

}  // namespace hubnet::testing
