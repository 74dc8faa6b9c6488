#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "rigidity/framework.hpp"

namespace rigidity {

struct TraceParams {
    double step = 0.02;           // arc-length predictor step
    double corrector_tol = 1e-10;  // infinity-norm residual target
    int max_steps = 20000;
    double closure_tol = 1e-6;

    void validate() const;
};

// The traced one-dimensional solution manifold: standard-position
// configurations of G - e sharing the edge lengths of the start point,
// with the deleted edge's squared length recorded at every step.
struct FlexPath {
    std::vector<Eigen::VectorXd> points;
    std::vector<double> edge_values;
    bool closed = false;
};

// Unit vector spanning the nullspace of the pinned Jacobian of G - e at the
// framework's configuration. The sign keeps a positive inner product with
// `prev` when supplied. Throws NotAMechanismError unless the nullity is
// exactly one.
Eigen::VectorXd tangent_direction(const Framework& fw, const Edge& removed_edge,
                                  const std::optional<Eigen::VectorXd>& prev = std::nullopt);

// Euler predictor / Newton corrector continuation along the flex manifold
// obtained by deleting `removed_edge`. The framework must be in standard
// position; pinned coordinates are held exactly. Terminates when the path
// returns to the start point with consistent orientation (closed) or after
// max_steps. `initial_tangent` seeds the orientation; tracing with the
// negated tangent traverses the same closed path in reverse.
FlexPath trace(const Framework& fw, const Edge& removed_edge, const TraceParams& params,
               const std::optional<Eigen::VectorXd>& initial_tangent = std::nullopt);

// Scans a traced path for points where the deleted edge recovers its
// original length, refines each crossing by bisection, and returns the
// first one that is not congruent to the start - an equivalent but
// non-congruent realization of the full graph G.
std::optional<Framework> find_second_realization(const Framework& fw, const Edge& removed_edge,
                                                 const TraceParams& params);

// Same search over an already-computed path.
std::optional<Framework> find_second_realization_on_path(const Framework& fw,
                                                         const Edge& removed_edge,
                                                         const TraceParams& params,
                                                         const FlexPath& path);

// Number of sign-change crossings of the deleted edge length along a path.
int count_crossings(const Framework& fw, const Edge& removed_edge, const FlexPath& path);

// True iff all pairwise vertex distances agree within tol. For frameworks
// with enough vertices this certifies congruence by an isometry of the
// surface itself.
bool is_congruent(const Config& p, const Config& q, double tol);

Config unflatten(const Eigen::VectorXd& flat);

}  // namespace rigidity
