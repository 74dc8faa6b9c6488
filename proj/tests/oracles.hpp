// Test-only oracles, deliberately independent of the library's algorithms:
// exhaustive subgraph counting instead of the pebble game, exhaustive vertex
// deletion instead of max-flow, finite differences instead of the assembled
// Jacobian.
#pragma once

#include <set>
#include <vector>

#include "rigidity/framework.hpp"
#include "rigidity/rng.hpp"

namespace oracles {

using namespace rigidity;

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, std::move(edges));
}

// two triangles glued at vertex 0: {0,1,2} and {0,3,4}
inline Graph bowtie_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

// K5 with an extra vertex joined to vertices 0 and 1
inline Graph k5_plus_degree2_vertex() {
    std::vector<Edge> edges = complete_graph(5).edges();
    edges.emplace_back(0, 5);
    edges.emplace_back(1, 5);
    return Graph(6, std::move(edges));
}

// two K5 blocks sharing vertex 4: {0..4} and {4..8}
inline Graph two_k5_sharing_vertex() {
    std::vector<Edge> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
    for (int u = 4; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) edges.emplace_back(u, v);
    return Graph(9, std::move(edges));
}

// exhaustive check of |E'| <= 2|V'| - ell over all induced subgraphs
inline bool brute_force_sparse(const Graph& g, int ell) {
    const int n = g.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int nv = 0, ne = 0;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) ++nv;
        for (const Edge& e : g.edges())
            if ((mask & (1u << e.u)) && (mask & (1u << e.v))) ++ne;
        if (ne >= 1 && ne > 2 * nv - ell) return false;
    }
    return true;
}

namespace detail {

inline bool connected_after_removal(const Graph& g, const std::set<int>& removed) {
    const int n = g.vertex_count();
    const auto adj = g.adjacency();
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (!removed.count(v)) {
            start = v;
            break;
        }
    if (start < 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {start};
    seen[start] = true;
    int count = 1;
    while (!stack.empty()) {
        const int a = stack.back();
        stack.pop_back();
        for (int b : adj[a]) {
            if (removed.count(b) || seen[b]) continue;
            seen[b] = true;
            ++count;
            stack.push_back(b);
        }
    }
    int remaining = n - static_cast<int>(removed.size());
    return count == remaining;
}

inline bool any_disconnecting_subset(const Graph& g, std::set<int>& removed, int next,
                                     int budget) {
    if (!connected_after_removal(g, removed)) return true;
    if (budget == 0) return false;
    for (int v = next; v < g.vertex_count(); ++v) {
        removed.insert(v);
        if (any_disconnecting_subset(g, removed, v + 1, budget - 1)) return true;
        removed.erase(v);
    }
    return false;
}

}  // namespace detail

// exhaustive: no removal of fewer than k vertices disconnects the graph
inline bool brute_force_k_connected(const Graph& g, int k) {
    if (g.vertex_count() <= k) return false;
    std::set<int> removed;
    return !detail::any_disconnecting_subset(g, removed, 0, k - 1);
}

inline Graph random_graph(int n, int m, std::uint64_t seed) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    Rng rng(seed);
    for (std::size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[rng.uniform_int(0, static_cast<std::int64_t>(i) - 1)]);
    all.resize(m);
    return Graph(n, std::move(all));
}

// (2, ell)-tight graph built from the smallest tight base by repeatedly
// attaching degree-two vertices (which preserves tightness)
inline Graph tight_graph(int ell, int n, std::uint64_t seed) {
    Graph g = [&] {
        switch (ell) {
            case 3:
                return complete_graph(3);
            case 2:
                return complete_graph(4);
            case 1: {
                auto edges = complete_graph(5).edges();
                edges.pop_back();
                return Graph(5, std::move(edges));
            }
            default: {
                // ell = 0: K5 plus a degree-2 vertex satisfies the count
                return k5_plus_degree2_vertex();
            }
        }
    }();
    Rng rng(seed);
    while (g.vertex_count() < n) {
        const int base = g.vertex_count();
        const int a = static_cast<int>(rng.uniform_int(0, base - 1));
        int b = static_cast<int>(rng.uniform_int(0, base - 2));
        if (b >= a) ++b;
        std::vector<Edge> edges = g.edges();
        edges.emplace_back(a, base);
        edges.emplace_back(b, base);
        g = Graph(base + 1, std::move(edges));
    }
    return g;
}

// full surface-rigidity map (edge lengths then surface values), used for
// finite-difference checks of the assembled Jacobian
inline Eigen::VectorXd rigidity_map(const Graph& g, const Surface& s, const Eigen::VectorXd& q) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    Eigen::VectorXd out(m + n);
    for (int i = 0; i < m; ++i) {
        const Edge& e = g.edges()[i];
        out(i) = (q.segment<3>(3 * e.u) - q.segment<3>(3 * e.v)).squaredNorm();
    }
    for (int i = 0; i < n; ++i) out(m + i) = h(s, q.segment<3>(3 * i));
    return out;
}

inline Eigen::MatrixXd finite_difference_jacobian(const Graph& g, const Surface& s,
                                                  const Eigen::VectorXd& q, double delta) {
    const Eigen::Index rows = g.edge_count() + g.vertex_count();
    Eigen::MatrixXd jac(rows, q.size());
    for (Eigen::Index j = 0; j < q.size(); ++j) {
        Eigen::VectorXd hi = q, lo = q;
        hi(j) += delta;
        lo(j) -= delta;
        jac.col(j) = (rigidity_map(g, s, hi) - rigidity_map(g, s, lo)) / (2.0 * delta);
    }
    return jac;
}

}  // namespace oracles
