#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rigidity/graph.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/surface.hpp"

namespace rigidity {

constexpr double kOnSurfaceTol = 1e-9;
constexpr double kDefaultRankTol = 1e-9;

// A graph realized on a surface. Validates that every vertex lies on the
// surface (|h| <= 1e-9) and, on the cone, away from the apex. An optional
// exact rational configuration switches rank computations to exact
// arithmetic; it must lie on the surface exactly and is the source of the
// floating-point configuration.
struct Framework {
    Graph graph;
    Surface surface;
    Config config;
    std::optional<std::vector<Vec3Q>> rational_config;

    Framework(Graph g, Surface s, Config c);
    Framework(Graph g, Surface s, std::vector<Vec3Q> rc);

    int vertex_count() const { return graph.vertex_count(); }
    Eigen::VectorXd flat_config() const;
};

// Jacobian of the surface-rigidity map: m edge rows (2(p_j - p_k) blocks)
// followed by n surface rows (grad h blocks). dFstar appends the ell
// pinning rows, a single 1 in each pinned coordinate.
struct RigidityMatrices {
    Eigen::MatrixXd dF;
    Eigen::MatrixXd dFstar;
};

struct RigidityReport {
    int rank_dF = 0;
    int nullity = 0;
    int trivial_dim = 0;
    int nontrivial_flex_dim = 0;
    bool is_infinitesimally_rigid = false;
    bool is_independent = false;
    bool is_isostatic = false;
    bool is_rigid_generic = false;
    std::string warning;  // "degenerate sample" when resampling votes disagreed

    friend bool operator==(const RigidityReport&, const RigidityReport&) = default;
};

// Squared edge lengths in edge-list order.
std::vector<double> edge_lengths(const Framework& fw);

// 0-based flat coordinate indices pinned by the standard-position map:
// sphere {x1,z1,x2}, cylinder {x1,z1}, cone {x1}, ellipsoid {}.
std::vector<int> pinned_coordinates(SurfaceKind kind);

RigidityMatrices build_matrices(const Framework& fw);

// Exact rational Jacobians (requires fw.rational_config).
std::vector<std::vector<BigRational>> build_dF_exact(const Framework& fw);
std::vector<std::vector<BigRational>> build_dFstar_exact(const Framework& fw);

// Singular values above tol * (largest singular value).
int numeric_rank(const Eigen::MatrixXd& mat, double tol);

// Rank plus a flag marking decisions with a singular value suspiciously
// close to the threshold; such ranks get re-voted on fresh samples.
struct RankResult {
    int rank = 0;
    bool borderline = false;
};
RankResult numeric_rank_checked(const Eigen::MatrixXd& mat, double tol);

// Exact rank over the rationals by Gaussian elimination.
int exact_rank(std::vector<std::vector<BigRational>> mat);

// Rank-based classification at the given tolerance. Uses exact arithmetic
// when the framework carries a rational configuration.
RigidityReport classify(const Framework& fw, double tol = kDefaultRankTol);

// Classification of the graph's generic behavior: sample a configuration
// and classify; borderline rank decisions trigger a majority vote over
// `trials` fresh samples.
RigidityReport classify_generic(const Graph& g, const Surface& s, std::uint64_t seed,
                                int trials = 3, double tol = kDefaultRankTol);

// True iff (G - e, p) stays rigid for every edge e. Borderline rank
// decisions are re-voted on up to `trials` fresh sampled configurations.
bool is_redundantly_rigid(const Framework& fw, int trials, std::uint64_t seed = 20130,
                          double tol = kDefaultRankTol);

// A unit infinitesimal flex orthogonal to the trivial flexes, when one
// exists.
std::optional<Eigen::VectorXd> nontrivial_flex(const Framework& fw,
                                               double tol = kDefaultRankTol);

}  // namespace rigidity
