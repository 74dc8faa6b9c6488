#include "rigidity/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace rigidity {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) throw InputError("graph must have a positive vertex count");
    std::set<Edge> seen;
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u + 1));
        if (e.u < 0 || e.v >= n_)
            throw InputError("edge endpoint out of range: (" + std::to_string(e.u + 1) + "," +
                             std::to_string(e.v + 1) + ")");
        if (!seen.insert(e).second)
            throw InputError("duplicate edge (" + std::to_string(e.u + 1) + "," +
                             std::to_string(e.v + 1) + ")");
    }
}

bool Graph::has_edge(int u, int v) const {
    const Edge e(u, v);
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

bool Graph::is_complete() const {
    return edge_count() == n_ * (n_ - 1) / 2;
}

Graph Graph::without_edge(const Edge& e) const {
    std::vector<Edge> rest;
    rest.reserve(edges_.size());
    bool removed = false;
    for (const Edge& f : edges_) {
        if (!removed && f == e) {
            removed = true;
            continue;
        }
        rest.push_back(f);
    }
    if (!removed)
        throw InputError("edge (" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                         ") not in graph");
    return Graph(n_, std::move(rest));
}

Graph Graph::with_edge(int u, int v) const {
    std::vector<Edge> ext = edges_;
    ext.emplace_back(u, v);
    return Graph(n_, std::move(ext));
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

namespace {

// Max number of internally vertex-disjoint s-t paths, computed as max-flow
// on the split graph (each vertex becomes in/out nodes joined by a unit
// arc). Stops early once `cap` paths are found.
int vertex_disjoint_paths(const Graph& g, int s, int t, int cap) {
    const int n = g.vertex_count();
    // node 2i = in(i), 2i+1 = out(i)
    const int N = 2 * n;
    std::vector<std::vector<int>> head(N);
    std::vector<int> to, capacity;
    auto add_arc = [&](int a, int b, int c) {
        head[a].push_back(static_cast<int>(to.size()));
        to.push_back(b);
        capacity.push_back(c);
        head[b].push_back(static_cast<int>(to.size()));
        to.push_back(a);
        capacity.push_back(0);
    };
    const int big = n + 1;
    for (int i = 0; i < n; ++i) add_arc(2 * i, 2 * i + 1, (i == s || i == t) ? big : 1);
    for (const Edge& e : g.edges()) {
        add_arc(2 * e.u + 1, 2 * e.v, big);
        add_arc(2 * e.v + 1, 2 * e.u, big);
    }
    const int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    std::vector<int> prev_arc(N);
    while (flow < cap) {
        std::fill(prev_arc.begin(), prev_arc.end(), -1);
        std::queue<int> q;
        q.push(src);
        prev_arc[src] = -2;
        while (!q.empty() && prev_arc[dst] == -1) {
            const int a = q.front();
            q.pop();
            for (int idx : head[a]) {
                if (capacity[idx] > 0 && prev_arc[to[idx]] == -1) {
                    prev_arc[to[idx]] = idx;
                    q.push(to[idx]);
                }
            }
        }
        if (prev_arc[dst] == -1) break;
        for (int a = dst; a != src;) {
            const int idx = prev_arc[a];
            capacity[idx] -= 1;
            capacity[idx ^ 1] += 1;
            a = to[idx ^ 1];
        }
        ++flow;
    }
    return flow;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) throw InputError("connectivity parameter k must be positive");
    const int n = g.vertex_count();
    if (n <= k) return false;
    if (g.is_complete()) return true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && vertex_disjoint_paths(g, u, v, k) < k) return false;
    return true;
}

namespace {

// (2, ell)-pebble game, valid for ell < 4. Every vertex starts with two
// pebbles; inserting an edge needs ell+1 pebbles on its endpoints and
// consumes one. Pebbles are pulled toward a vertex by reversing directed
// paths in the partial orientation.
class PebbleGame {
public:
    explicit PebbleGame(int n) : pebbles_(n, 2), out_(n) {}

    bool insert(int u, int v, int ell) {
        while (pebbles_[u] + pebbles_[v] < ell + 1) {
            if (!pull(u, v) && !pull(v, u)) return false;
        }
        if (pebbles_[u] > 0) {
            --pebbles_[u];
            out_[u].push_back(v);
        } else {
            --pebbles_[v];
            out_[v].push_back(u);
        }
        return true;
    }

private:
    // find a free pebble reachable from `root` (never taking one off `other`)
    // and move it to `root` by reversing the search path
    bool pull(int root, int other) {
        const int n = static_cast<int>(pebbles_.size());
        std::vector<int> parent(n, -1);
        std::vector<int> stack = {root};
        parent[root] = root;
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (int b : out_[a]) {
                if (parent[b] != -1) continue;
                parent[b] = a;
                if (b != other && pebbles_[b] > 0) {
                    --pebbles_[b];
                    ++pebbles_[root];
                    for (int c = b; c != root;) {
                        const int pa = parent[c];
                        auto& po = out_[pa];
                        po.erase(std::find(po.begin(), po.end(), c));
                        out_[c].push_back(pa);
                        c = pa;
                    }
                    return true;
                }
                stack.push_back(b);
            }
        }
        return false;
    }

    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_;
};

}  // namespace

bool is_sparse(const Graph& g, int ell) {
    if (ell < 0 || ell > 3) throw InputError("sparsity offset ell must be in 0..3");
    PebbleGame game(g.vertex_count());
    for (const Edge& e : g.edges())
        if (!game.insert(e.u, e.v, ell)) return false;
    return true;
}

bool is_tight(const Graph& g, int ell) {
    return g.edge_count() == 2 * g.vertex_count() - ell && is_sparse(g, ell);
}

bool combinatorial_isostatic(const Graph& g, SurfaceKind kind) {
    int ell = 0;
    switch (kind) {
        case SurfaceKind::Sphere:
            ell = 3;
            break;
        case SurfaceKind::Cylinder:
            ell = 2;
            break;
        case SurfaceKind::Cone:
            ell = 1;
            break;
        case SurfaceKind::Ellipsoid:
            throw InputError(
                "combinatorial characterization unknown for the ellipsoid; "
                "the count condition is necessary only");
    }
    if (g.is_complete() && g.vertex_count() <= 5 - ell) return true;
    return is_tight(g, ell);
}

}  // namespace rigidity
