#pragma once

#include <utility>
#include <vector>

#include "rigidity/errors.hpp"

namespace rigidity {

enum class SurfaceKind { Sphere, Cylinder, Cone, Ellipsoid };

// Undirected edge, endpoints 0-based and ordered u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Simple undirected graph on vertices 0..n-1 (1-based in all JSON I/O).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    bool is_complete() const;

    // G - e; the edge must exist
    Graph without_edge(const Edge& e) const;
    // G + uv; no-op rejected if the edge already exists
    Graph with_edge(int u, int v) const;

    std::vector<std::vector<int>> adjacency() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// True iff g has more than k vertices and no vertex cut of size < k
// (so K_{k+1} counts as k-connected). Decided by counting vertex-disjoint
// paths via max-flow between non-adjacent pairs.
bool is_k_connected(const Graph& g, int k);

// (2, ell)-sparsity for 0 <= ell <= 3: every subgraph spanned by at least
// one edge has |E'| <= 2|V'| - ell. Decided by the pebble game.
bool is_sparse(const Graph& g, int ell);

// sparse and m = 2n - ell
bool is_tight(const Graph& g, int ell);

// Count characterization of isostatic graphs: complete with n <= 5 - ell,
// or (2, ell)-tight. Only proved for sphere, cylinder and cone; the
// ellipsoid is rejected.
bool combinatorial_isostatic(const Graph& g, SurfaceKind kind);

}  // namespace rigidity
