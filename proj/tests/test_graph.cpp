#include <doctest.h>

#include "oracles.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/rng.hpp"

using namespace rigidity;

TEST_CASE("graph invariants are validated") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph(0, {}), InputError);
    const Graph g(3, {{1, 0}});  // endpoints normalized to u < v
    CHECK(g.edges()[0] == Edge(0, 1));
}

TEST_CASE("k-connectivity on the named examples") {
    CHECK(is_k_connected(oracles::complete_graph(4), 3));
    CHECK_FALSE(is_k_connected(oracles::path_graph(3), 2));

    const Graph bowtie = oracles::bowtie_graph();
    CHECK_FALSE(oracles::brute_force_k_connected(bowtie, 2));
    CHECK_FALSE(is_k_connected(bowtie, 2));
    CHECK(is_k_connected(bowtie, 1));
}

TEST_CASE("k-connectivity convention for tiny graphs") {
    CHECK(is_k_connected(oracles::complete_graph(2), 1));
    CHECK_FALSE(is_k_connected(oracles::complete_graph(3), 3));  // n <= k
    CHECK(is_k_connected(oracles::complete_graph(4), 1));
    CHECK_FALSE(is_k_connected(Graph(2, {}), 1));
}

TEST_CASE("k-connectivity agrees with exhaustive vertex deletion") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(derive_seed(901, seed));
        const int n = static_cast<int>(rng.uniform_int(3, 8));
        const int max_m = n * (n - 1) / 2;
        const int m = static_cast<int>(rng.uniform_int(0, max_m));
        const Graph g = oracles::random_graph(n, m, derive_seed(902, seed));
        for (int k = 1; k <= 4; ++k) {
            CAPTURE(seed);
            CAPTURE(k);
            CHECK(is_k_connected(g, k) == oracles::brute_force_k_connected(g, k));
        }
    }
}

TEST_CASE("sparsity counts on the named examples") {
    CHECK(is_sparse(oracles::complete_graph(4), 2));
    CHECK_FALSE(is_sparse(oracles::complete_graph(4), 3));
    CHECK(is_sparse(oracles::k5_plus_degree2_vertex(), 0));

    CHECK(is_tight(oracles::complete_graph(4), 2));
    CHECK_FALSE(is_tight(oracles::complete_graph(4), 3));
    CHECK(is_tight(oracles::k5_plus_degree2_vertex(), 0));
}

TEST_CASE("pebble game agrees with exhaustive subgraph counting") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Rng rng(derive_seed(903, seed));
        const int n = static_cast<int>(rng.uniform_int(1, 7));
        const int max_m = n * (n - 1) / 2;
        const int m = static_cast<int>(rng.uniform_int(0, max_m));
        const Graph g = oracles::random_graph(n, m, derive_seed(904, seed));
        for (int ell = 0; ell <= 3; ++ell) {
            CAPTURE(seed);
            CAPTURE(ell);
            CHECK(is_sparse(g, ell) == oracles::brute_force_sparse(g, ell));
        }
    }
}

TEST_CASE("sparsity is monotone under edge deletion") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = oracles::random_graph(6, 9, derive_seed(905, seed));
        for (int ell = 0; ell <= 3; ++ell) {
            if (!is_sparse(g, ell)) continue;
            for (const Edge& e : g.edges()) CHECK(is_sparse(g.without_edge(e), ell));
        }
    }
}

TEST_CASE("tight implies sparse") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        for (int ell = 1; ell <= 3; ++ell) {
            const Graph g = oracles::tight_graph(ell, 7, derive_seed(906, seed));
            CHECK(is_tight(g, ell));
            CHECK(is_sparse(g, ell));
        }
    }
}

TEST_CASE("combinatorial isostatic classification") {
    CHECK(combinatorial_isostatic(oracles::complete_graph(2), SurfaceKind::Cylinder));
    CHECK(combinatorial_isostatic(oracles::complete_graph(4), SurfaceKind::Cylinder));
    CHECK_FALSE(combinatorial_isostatic(oracles::complete_graph(4), SurfaceKind::Sphere));
    CHECK(combinatorial_isostatic(oracles::complete_graph(3), SurfaceKind::Sphere));
    CHECK(combinatorial_isostatic(oracles::complete_graph(4), SurfaceKind::Cone));
    CHECK_THROWS_AS(
        combinatorial_isostatic(oracles::complete_graph(4), SurfaceKind::Ellipsoid),
        InputError);
}
