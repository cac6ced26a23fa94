#include "hubnet/network.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hubnet {

Money PathWeight::money() const {
    if (!reachable()) throw std::logic_error("money() on unreachable path weight");
    return Money::from_minor(raw_);
}

PathWeight PathWeight::operator+(PathWeight rhs) const {
    if (!reachable() || !rhs.reachable()) return unreachable();
    int64_t sum;
    if (__builtin_add_overflow(raw_, rhs.raw_, &sum) || sum == kUnreachableRaw)
        throw std::overflow_error("path weight addition overflow");
    return from_raw(sum);
}

std::vector<ValidationIssue> Network::check(int vertex_count, const std::vector<Edge>& edges,
                                            bool check_cost_signs) {
    std::vector<ValidationIssue> issues;
    auto add = [&](ValidationCode code, std::string msg) {
        issues.push_back({code, std::move(msg)});
    };

    if (vertex_count < 1) {
        add(ValidationCode::NonPositiveQuantity,
            "vertex count must be positive, got " + std::to_string(vertex_count));
        return issues;
    }

    bool ids_ok = true;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (size_t e = 0; e < edges.size(); ++e) {
        const Edge& edge = edges[e];
        if (edge.u < 0 || edge.u >= vertex_count || edge.v < 0 || edge.v >= vertex_count) {
            add(ValidationCode::UnknownVertex,
                "edge " + std::to_string(e) + " (" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                    ") references a vertex outside [0," + std::to_string(vertex_count) + ")");
            ids_ok = false;
            continue;
        }
        if (edge.u == edge.v) {
            add(ValidationCode::SelfLoop, "edge " + std::to_string(e) + " is a self loop at vertex " +
                                              std::to_string(edge.u));
            continue;
        }
        auto key = std::minmax(edge.u, edge.v);
        if (!seen.insert(key).second)
            add(ValidationCode::DuplicateEdge, "duplicate edge {" + std::to_string(key.first) + "," +
                                                   std::to_string(key.second) + "}");
        if (check_cost_signs) {
            if (edge.cost_heavy < Money() || edge.cost_light < Money() || edge.cost_buyer < Money())
                add(ValidationCode::NegativeCost, "edge {" + std::to_string(edge.u) + "," +
                                                      std::to_string(edge.v) + "} has a negative cost");
            if (edge.cost_heavy < edge.cost_light)
                add(ValidationCode::CostOrderViolation,
                    "edge {" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                        "} has heavy cost " + edge.cost_heavy.str() + " below light cost " +
                        edge.cost_light.str());
        }
    }

    if (ids_ok) {
        std::vector<std::vector<VertexId>> adjacency(vertex_count);
        for (const Edge& edge : edges) {
            if (edge.u == edge.v) continue;
            adjacency[edge.u].push_back(edge.v);
            adjacency[edge.v].push_back(edge.u);
        }
        std::vector<char> visited(vertex_count, 0);
        std::vector<VertexId> stack = {0};
        visited[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : adjacency[x]) {
                if (!visited[y]) {
                    visited[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        if (reached != vertex_count)
            add(ValidationCode::DisconnectedNetwork,
                "network is disconnected: " + std::to_string(vertex_count - reached) +
                    " of " + std::to_string(vertex_count) + " vertices unreachable from vertex 0");
    }

    return issues;
}

Network::Network(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {}

Network Network::create(int vertex_count, std::vector<Edge> edges) {
    auto issues = check(vertex_count, edges, true);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return Network(vertex_count, std::move(edges));
}

Network Network::create_unchecked_costs(int vertex_count, std::vector<Edge> edges) {
    auto issues = check(vertex_count, edges, false);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return Network(vertex_count, std::move(edges));
}

CostMatrix::CostMatrix(int n) : n_(n), cells_(static_cast<size_t>(n) * n, PathWeight::kUnreachableRaw) {
    if (n < 1) throw std::invalid_argument("cost matrix needs at least one vertex");
    for (int i = 0; i < n; ++i) cells_[static_cast<size_t>(i) * n + i] = 0;
}

CostMatrix CostMatrix::from_raw(int n, std::vector<int64_t> cells) {
    if (n < 1 || cells.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("cost matrix shape mismatch");
    CostMatrix m(n);
    m.cells_ = std::move(cells);
    return m;
}

size_t CostMatrix::index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("cost matrix index");
    return static_cast<size_t>(i) * n_ + j;
}

NegativeCycleError::NegativeCycleError(VertexId vertex)
    : std::runtime_error("negative cycle through vertex " + std::to_string(vertex)), vertex_(vertex) {}

CostMatrix build_weight_matrix(const Network& net, CostClass cls) {
    CostMatrix d0(net.vertex_count());
    for (const Edge& edge : net.edges()) {
        Money w;
        switch (cls) {
            case CostClass::ActorHeavy: w = edge.cost_heavy; break;
            case CostClass::ActorLight: w = edge.cost_light; break;
            case CostClass::Buyer: w = edge.cost_buyer; break;
        }
        d0.set(edge.u, edge.v, PathWeight::of(w));
        d0.set(edge.v, edge.u, PathWeight::of(w));
    }
    return d0;
}

namespace {

constexpr int64_t kUnreachable = PathWeight::kUnreachableRaw;

// Weights around a pivot must not form a negative cycle: d(i,k) + d(k,i) < 0
// means the cycle i -> k -> i has negative weight.
void check_pivot_stage(const int64_t* d, int n, int k) {
    for (int i = 0; i < n; ++i) {
        int64_t dik = d[static_cast<size_t>(i) * n + k];
        int64_t dki = d[static_cast<size_t>(k) * n + i];
        if (dik == kUnreachable || dki == kUnreachable) continue;
        if (static_cast<__int128>(dik) + dki < 0) throw NegativeCycleError(i);
    }
}

}  // namespace

CostMatrix all_pairs_shortest_paths(const CostMatrix& d0) {
    const int n = d0.size();
    CostMatrix out = d0;
    int64_t* d = out.raw_data();

    for (int k = 0; k < n; ++k) {
        const int64_t* row_k = d + static_cast<size_t>(k) * n;
        // Row k and column k are fixed points of stage k (the diagonal stays
        // zero), so rows can be relaxed independently.
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            int64_t* row_i = d + static_cast<size_t>(i) * n;
            const int64_t dik = row_i[k];
            if (dik == kUnreachable) continue;
            for (int j = 0; j < n; ++j) {
                if (j == k || j == i) continue;
                const int64_t dkj = row_k[j];
                if (dkj == kUnreachable) continue;
                int64_t cand;
                if (__builtin_add_overflow(dik, dkj, &cand)) continue;
                if (cand < row_i[j]) row_i[j] = cand;
            }
        }
        check_pivot_stage(d, n, k);
    }
    return out;
}

namespace reference {

CostMatrix all_pairs_shortest_paths(const CostMatrix& d0) {
    const int n = d0.size();
    std::vector<int64_t> cur(d0.raw().begin(), d0.raw().end());
    std::vector<int64_t> next(cur.size());

    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                size_t ij = static_cast<size_t>(i) * n + j;
                if (i == j) {
                    next[ij] = 0;
                    continue;
                }
                int64_t through = kUnreachable;
                int64_t dik = cur[static_cast<size_t>(i) * n + k];
                int64_t dkj = cur[static_cast<size_t>(k) * n + j];
                if (dik != kUnreachable && dkj != kUnreachable) {
                    if (__builtin_add_overflow(dik, dkj, &through)) through = kUnreachable;
                }
                next[ij] = std::min(cur[ij], through);
            }
        }
        cur.swap(next);
        check_pivot_stage(cur.data(), n, k);
    }
    return CostMatrix::from_raw(n, std::move(cur));
}

}  // namespace reference

}  // namespace hubnet
