#include "rigidity/flextrace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rigidity {

void TraceParams::validate() const {
    if (step <= 0.0 || step >= 1.0) throw InputError("trace step must lie in (0, 1)");
    if (corrector_tol <= 0.0) throw InputError("corrector tolerance must be positive");
    if (max_steps < 0) throw InputError("max_steps must be nonnegative");
    if (closure_tol <= 0.0) throw InputError("closure tolerance must be positive");
}

Config unflatten(const Eigen::VectorXd& flat) {
    Config config(flat.size() / 3);
    for (std::size_t i = 0; i < config.size(); ++i) config[i] = flat.segment<3>(3 * i);
    return config;
}

bool is_congruent(const Config& p, const Config& q, double tol) {
    if (p.size() != q.size()) throw InputError("configurations differ in vertex count");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (std::abs((p[i] - p[j]).norm() - (q[i] - q[j]).norm()) > tol) return false;
    return true;
}

namespace {

constexpr int kMaxNewtonIters = 30;
constexpr int kMaxStepHalvings = 10;
constexpr double kApexRadius = 1e-6;
constexpr double kStandardPositionTol = 1e-8;

// The pinned constraint system of G - e: edge rows of the remaining edges
// plus the surface rows, with the standard-position coordinates eliminated
// (held at their start values). On the flex manifold this Jacobian has a
// one-dimensional nullspace.
class MechanismSystem {
public:
    MechanismSystem(const Framework& fw, const Edge& removed, double corrector_tol)
        : surface_(fw.surface),
          edges_(fw.graph.without_edge(removed).edges()),
          removed_(removed),
          n_(fw.vertex_count()),
          pins_(pinned_coordinates(fw.surface.kind)),
          corrector_tol_(corrector_tol) {
        std::vector<bool> pinned(3 * n_, false);
        for (int p : pins_) pinned[p] = true;
        for (int i = 0; i < 3 * n_; ++i)
            if (!pinned[i]) free_idx_.push_back(i);

        base_ = fw.flat_config();
        f_target_.resize(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i)
            f_target_(i) = edge_sq(base_, edges_[i]);
    }

    int dim() const { return 3 * n_; }
    int free_count() const { return static_cast<int>(free_idx_.size()); }
    const Eigen::VectorXd& start() const { return base_; }

    double removed_edge_sq(const Eigen::VectorXd& q) const { return edge_sq(q, removed_); }

    Eigen::VectorXd residual(const Eigen::VectorXd& q) const {
        const int m = static_cast<int>(edges_.size());
        Eigen::VectorXd r(m + n_);
        for (int i = 0; i < m; ++i) r(i) = edge_sq(q, edges_[i]) - f_target_(i);
        for (int i = 0; i < n_; ++i) r(m + i) = h(surface_, q.segment<3>(3 * i));
        return r;
    }

    Eigen::MatrixXd jacobian_free(const Eigen::VectorXd& q) const {
        const int m = static_cast<int>(edges_.size());
        Eigen::MatrixXd full = Eigen::MatrixXd::Zero(m + n_, 3 * n_);
        for (int i = 0; i < m; ++i) {
            const Edge& e = edges_[i];
            const Eigen::Vector3d d = 2.0 * (q.segment<3>(3 * e.u) - q.segment<3>(3 * e.v));
            full.block<1, 3>(i, 3 * e.u) = d.transpose();
            full.block<1, 3>(i, 3 * e.v) = -d.transpose();
        }
        for (int i = 0; i < n_; ++i)
            full.block<1, 3>(m + i, 3 * i) =
                grad_h(surface_, q.segment<3>(3 * i)).transpose();
        Eigen::MatrixXd reduced(m + n_, free_count());
        for (int j = 0; j < free_count(); ++j) reduced.col(j) = full.col(free_idx_[j]);
        return reduced;
    }

    // Newton iteration with minimal-norm updates; pinned coordinates never
    // move. Returns the corrected point or nothing on divergence.
    std::optional<Eigen::VectorXd> correct(Eigen::VectorXd q) const {
        double prev_norm = std::numeric_limits<double>::infinity();
        int growth_streak = 0;
        for (int it = 0; it < kMaxNewtonIters; ++it) {
            const Eigen::VectorXd r = residual(q);
            const double norm = r.lpNorm<Eigen::Infinity>();
            if (norm <= corrector_tol_) return q;
            if (norm > prev_norm) {
                if (++growth_streak >= 3) return std::nullopt;
            } else {
                growth_streak = 0;
            }
            prev_norm = norm;
            const Eigen::VectorXd delta =
                Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(jacobian_free(q))
                    .solve(-r);
            for (int j = 0; j < free_count(); ++j) q(free_idx_[j]) += delta(j);
        }
        return std::nullopt;
    }

    // Unit nullspace vector of the pinned Jacobian, embedded in R^{3n} with
    // zeros at the pinned coordinates. Throws unless the nullity is one.
    Eigen::VectorXd tangent(const Eigen::VectorXd& q) const {
        const Eigen::MatrixXd jac = jacobian_free(q);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeFullV);
        const Eigen::VectorXd& sv = svd.singularValues();
        int rank = 0;
        if (sv.size() > 0 && sv(0) > 0.0) {
            const double threshold = kDefaultRankTol * sv(0);
            for (int i = 0; i < sv.size(); ++i)
                if (sv(i) > threshold) ++rank;
        }
        const int nullity = free_count() - rank;
        if (nullity != 1)
            throw NotAMechanismError(
                "deleting the edge leaves a pinned nullity of " + std::to_string(nullity) +
                ", not the single degree of freedom of a mechanism");
        Eigen::VectorXd t = Eigen::VectorXd::Zero(dim());
        const Eigen::VectorXd tf = svd.matrixV().col(free_count() - 1);
        for (int j = 0; j < free_count(); ++j) t(free_idx_[j]) = tf(j);
        return t;
    }

    void check_apex(const Eigen::VectorXd& q, int step_index) const {
        if (surface_.kind != SurfaceKind::Cone) return;
        for (int i = 0; i < n_; ++i)
            if (q.segment<3>(3 * i).norm() < kApexRadius)
                throw SingularityError("path reached the cone apex at step " +
                                       std::to_string(step_index));
    }

private:
    static double edge_sq(const Eigen::VectorXd& q, const Edge& e) {
        return (q.segment<3>(3 * e.u) - q.segment<3>(3 * e.v)).squaredNorm();
    }

    Surface surface_;
    std::vector<Edge> edges_;
    Edge removed_;
    int n_;
    std::vector<int> pins_;
    std::vector<int> free_idx_;
    Eigen::VectorXd base_;
    Eigen::VectorXd f_target_;
    double corrector_tol_;
};

Eigen::VectorXd orient(Eigen::VectorXd t, const std::optional<Eigen::VectorXd>& prev) {
    if (prev) {
        if (t.dot(*prev) < 0.0) t = -t;
        return t;
    }
    // canonical sign: largest-magnitude entry positive
    int imax = 0;
    for (int i = 1; i < t.size(); ++i)
        if (std::abs(t(i)) > std::abs(t(imax))) imax = i;
    if (t(imax) < 0.0) t = -t;
    return t;
}

void require_standard_position(const Framework& fw) {
    const auto pins = pinned_coordinates(fw.surface.kind);
    const Eigen::VectorXd p = fw.flat_config();
    for (int pin : pins)
        if (std::abs(p(pin)) > kStandardPositionTol)
            throw InputError("framework is not in standard position (pinned coordinate " +
                             std::to_string(pin) + " is " + std::to_string(p(pin)) + ")");
    switch (fw.surface.kind) {
        case SurfaceKind::Sphere:
        case SurfaceKind::Cylinder:
            if (std::abs(p(1) - 1.0) > kStandardPositionTol)
                throw InputError("framework is not in standard position (v1 must sit at (0,1,0))");
            break;
        case SurfaceKind::Cone:
            if (p(1) <= 0.0)
                throw InputError("framework is not in standard position (y1 must be positive)");
            break;
        case SurfaceKind::Ellipsoid:
            break;
    }
}

}  // namespace

Eigen::VectorXd tangent_direction(const Framework& fw, const Edge& removed_edge,
                                  const std::optional<Eigen::VectorXd>& prev) {
    const MechanismSystem sys(fw, removed_edge, kDefaultRankTol);
    return orient(sys.tangent(fw.flat_config()), prev);
}

FlexPath trace(const Framework& fw, const Edge& removed_edge, const TraceParams& params,
               const std::optional<Eigen::VectorXd>& initial_tangent) {
    params.validate();
    require_standard_position(fw);
    const MechanismSystem sys(fw, removed_edge, params.corrector_tol);
    const Eigen::VectorXd p0 = sys.start();

    FlexPath path;
    path.points.push_back(p0);
    path.edge_values.push_back(sys.removed_edge_sq(p0));

    Eigen::VectorXd t0 = orient(sys.tangent(p0), initial_tangent);
    Eigen::VectorXd q = p0;
    Eigen::VectorXd t = t0;
    const double escape_radius = std::max(2.0 * params.step, 10.0 * params.closure_tol);
    bool escaped = false;

    for (int k = 0; k < params.max_steps; ++k) {
        double step = params.step;
        std::optional<Eigen::VectorXd> next;
        for (int halving = 0; halving <= kMaxStepHalvings; ++halving) {
            next = sys.correct(q + step * t);
            if (next) break;
            step *= 0.5;
        }
        if (!next)
            throw CorrectorDivergenceError(
                "corrector failed to converge at step " + std::to_string(k) +
                " even after halving the predictor step " +
                std::to_string(kMaxStepHalvings) + " times",
                k);
        sys.check_apex(*next, k);
        q = *next;
        t = orient(sys.tangent(q), t);
        path.points.push_back(q);
        path.edge_values.push_back(sys.removed_edge_sq(q));

        const double dist = (q - p0).norm();
        if (dist > escape_radius) escaped = true;
        if (escaped && dist < params.step && t.dot(t0) > 0.9) {
            // refine onto the start point: Newton along the local tangent
            Eigen::VectorXd qc = q;
            Eigen::VectorXd tc = t;
            for (int it = 0; it < 10 && !path.closed; ++it) {
                const double gap = tc.dot(p0 - qc);
                const auto refined = sys.correct(qc + gap * tc);
                if (!refined) break;
                qc = *refined;
                if ((qc - p0).norm() <= params.closure_tol) path.closed = true;
                tc = orient(sys.tangent(qc), tc);
            }
            if (path.closed) {
                path.points.push_back(qc);
                path.edge_values.push_back(sys.removed_edge_sq(qc));
                break;
            }
        }
    }
    return path;
}

namespace {

constexpr double kCrossingTol = 1e-10;
constexpr int kMaxBisections = 100;

Eigen::VectorXd refine_crossing(const MechanismSystem& sys, Eigen::VectorXd qa,
                                Eigen::VectorXd qb, double f0) {
    double fa = sys.removed_edge_sq(qa) - f0;
    Eigen::VectorXd best = qa;
    double best_val = std::abs(fa);
    for (int it = 0; it < kMaxBisections; ++it) {
        const auto mid = sys.correct(0.5 * (qa + qb));
        if (!mid) throw NumericalError("corrector failed while refining an edge-length crossing");
        const double fm = sys.removed_edge_sq(*mid) - f0;
        if (std::abs(fm) < best_val) {
            best = *mid;
            best_val = std::abs(fm);
        }
        if (best_val <= kCrossingTol) return best;
        if ((fm > 0.0) == (fa > 0.0)) {
            qa = *mid;
            fa = fm;
        } else {
            qb = *mid;
        }
    }
    return best;
}

}  // namespace

int count_crossings(const Framework& fw, const Edge& removed_edge, const FlexPath& path) {
    const MechanismSystem sys(fw, removed_edge, kDefaultRankTol);
    const double f0 = sys.removed_edge_sq(sys.start());
    int crossings = 0;
    for (std::size_t i = 0; i + 1 < path.edge_values.size(); ++i)
        if ((path.edge_values[i] - f0) * (path.edge_values[i + 1] - f0) < 0.0) ++crossings;
    return crossings;
}

std::optional<Framework> find_second_realization_on_path(const Framework& fw,
                                                         const Edge& removed_edge,
                                                         const TraceParams& params,
                                                         const FlexPath& path) {
    const MechanismSystem sys(fw, removed_edge, params.corrector_tol);
    const Eigen::VectorXd p0 = sys.start();
    const double f0 = sys.removed_edge_sq(p0);
    const Config start_config = unflatten(p0);
    const double congruence_tol = 1e3 * params.corrector_tol;

    for (std::size_t i = 0; i + 1 < path.edge_values.size(); ++i) {
        if ((path.edge_values[i] - f0) * (path.edge_values[i + 1] - f0) >= 0.0) continue;
        const Eigen::VectorXd p1 = refine_crossing(sys, path.points[i], path.points[i + 1], f0);
        const Config candidate = unflatten(p1);
        if (!is_congruent(start_config, candidate, congruence_tol))
            return Framework(fw.graph, fw.surface, candidate);
    }
    return std::nullopt;
}

std::optional<Framework> find_second_realization(const Framework& fw, const Edge& removed_edge,
                                                 const TraceParams& params) {
    const FlexPath path = trace(fw, removed_edge, params);
    return find_second_realization_on_path(fw, removed_edge, params, path);
}

}  // namespace rigidity
