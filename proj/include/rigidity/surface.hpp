#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "rigidity/graph.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

using Vec3 = Eigen::Vector3d;
using Config = std::vector<Vec3>;

// One of the four quadric surfaces. The ellipsoid x^2 + a y^2 + b z^2 = 1
// carries rational semi-axis parameters with 1 < a < b; the other kinds
// have no parameters.
struct Surface {
    SurfaceKind kind = SurfaceKind::Sphere;
    Rat64 a{2, 1};
    Rat64 b{3, 1};

    Surface() = default;
    explicit Surface(SurfaceKind k) : kind(k) {}
    Surface(SurfaceKind k, Rat64 a_, Rat64 b_);

    double a_val() const { return a.value(); }
    double b_val() const { return b.value(); }
};

// Per-surface constants: dimension of the infinitesimal isometry space,
// the vertex-count offset of the congruence oracle, and the connectivity
// required of globally rigid graphs.
struct SurfaceMeta {
    int ell;
    int gamma;
    int k_conn;
};

SurfaceMeta surface_meta(SurfaceKind kind);

const char* surface_name(SurfaceKind kind);
SurfaceKind surface_kind_from_name(const std::string& name);

// Constraint function whose zero set is the surface.
double h(const Surface& s, const Vec3& p);
// Gradient of h (the paper's factor 2 is kept).
Vec3 grad_h(const Surface& s, const Vec3& p);

// Exact counterparts for rational points.
BigRational h_exact(const Surface& s, const Vec3Q& p);
Vec3Q grad_h_exact(const Surface& s, const Vec3Q& p);

// Basis of the space of trivial infinitesimal flexes of the configuration:
// rotation fields (and the z-translation on the cylinder) evaluated at every
// vertex, flattened to R^{3n}. Returns exactly ell vectors; they are
// linearly independent whenever the configuration is generic enough.
std::vector<Eigen::VectorXd> trivial_flex_basis(const Surface& s, const Config& config);

// Move the configuration to standard position by an isometry of the
// surface: sphere v1 -> (0,1,0) then rotate about y until x2 = 0 (z2 >= 0);
// cylinder v1 -> (0,1,0); cone x1 = 0 with y1 > 0; ellipsoid identity.
Config to_standard_position(const Surface& s, const Config& config);

// Deterministic pseudo-random configuration with every point on the
// surface to within 1e-12. Stands in for "generic".
Config sample_config(const Surface& s, int n, std::uint64_t seed);

// Rational points exactly on the surface, via rational parametrizations
// (stereographic sphere/ellipsoid, tangent half-angle circle). Feeds the
// exact-rank path.
std::vector<Vec3Q> sample_rational_config(const Surface& s, int n, std::uint64_t seed);

// Rigid motion x -> R x + t mapping the surface onto itself.
struct Isometry {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Vec3 translation = Vec3::Zero();

    Vec3 operator()(const Vec3& p) const { return rotation * p + translation; }
    Config apply(const Config& config) const;
};

// Seeded isometry of the surface: sphere rotations; cylinder rotations
// about z composed with z-translations; cone rotations about z; ellipsoid
// coordinate-plane reflections.
Isometry random_isometry(const Surface& s, std::uint64_t seed);

Config rational_to_double(const std::vector<Vec3Q>& config);

}  // namespace rigidity
