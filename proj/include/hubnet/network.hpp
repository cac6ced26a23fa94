#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hubnet/money.hpp"
#include "hubnet/validation.hpp"

namespace hubnet {

using VertexId = int;

enum class CostClass { ActorHeavy, ActorLight, Buyer };

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Money cost_heavy;
    Money cost_light;
    Money cost_buyer;
    bool operator==(const Edge&) const = default;
};

// Path weight with a distinguished unreachable sentinel. The sentinel
// absorbs addition and compares greater than every finite weight.
class PathWeight {
public:
    static constexpr int64_t kUnreachableRaw = std::numeric_limits<int64_t>::max();

    constexpr PathWeight() = default;

    static constexpr PathWeight unreachable() { return PathWeight(); }
    static constexpr PathWeight of(Money m) { return PathWeight(m.minor()); }
    static constexpr PathWeight from_raw(int64_t raw) { return PathWeight(raw); }

    constexpr bool reachable() const { return raw_ != kUnreachableRaw; }
    constexpr int64_t raw() const { return raw_; }
    Money money() const;  // throws std::logic_error on the sentinel

    PathWeight operator+(PathWeight rhs) const;

    auto operator<=>(const PathWeight&) const = default;

private:
    explicit constexpr PathWeight(int64_t raw) : raw_(raw) {}

    int64_t raw_ = kUnreachableRaw;
};

// Undirected weighted network. Invariants (ids in range, no self loops or
// duplicate pairs, nonnegative costs with heavy >= light, connectivity) are
// enforced at construction.
class Network {
public:
    static Network create(int vertex_count, std::vector<Edge> edges);

    // Skips the cost sign and ordering checks. Exists so tests can drive
    // the negative-cycle error path; structural checks still apply.
    static Network create_unchecked_costs(int vertex_count, std::vector<Edge> edges);

    static std::vector<ValidationIssue> check(int vertex_count, const std::vector<Edge>& edges,
                                              bool check_cost_signs);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Network&) const = default;

private:
    Network(int vertex_count, std::vector<Edge> edges);

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

// Dense, symmetric all-pairs cost matrix with zero diagonal.
class CostMatrix {
public:
    CostMatrix() = default;
    explicit CostMatrix(int n);  // zero diagonal, unreachable elsewhere
    static CostMatrix from_raw(int n, std::vector<int64_t> cells);

    int size() const { return n_; }
    PathWeight at(int i, int j) const { return PathWeight::from_raw(cells_[index(i, j)]); }
    void set(int i, int j, PathWeight w) { cells_[index(i, j)] = w.raw(); }

    std::span<const int64_t> raw() const { return cells_; }
    int64_t* raw_data() { return cells_.data(); }

    bool operator==(const CostMatrix&) const = default;

private:
    size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<int64_t> cells_;
};

class NegativeCycleError : public std::runtime_error {
public:
    explicit NegativeCycleError(VertexId vertex);
    VertexId vertex() const { return vertex_; }

private:
    VertexId vertex_;
};

CostMatrix build_weight_matrix(const Network& net, CostClass cls);

// Floyd-Warshall over the full vertex set; OpenMP-parallel across rows.
// Throws NegativeCycleError when a pivot stage exposes a negative cycle.
// The input matrix is not mutated.
CostMatrix all_pairs_shortest_paths(const CostMatrix& d0);

namespace reference {
// Serial transcription of the stage recurrence, kept as the comparison
// baseline for the parallel kernel.
CostMatrix all_pairs_shortest_paths(const CostMatrix& d0);
}  // namespace reference

}  // namespace hubnet
