#include "rigidity/framework.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rigidity/rng.hpp"

namespace rigidity {

namespace {

void validate_on_surface(const Surface& s, const Config& config) {
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (std::abs(h(s, config[i])) > kOnSurfaceTol)
            throw InputError("vertex " + std::to_string(i + 1) + " is off the surface (h = " +
                             std::to_string(h(s, config[i])) + ")");
        if (s.kind == SurfaceKind::Cone && config[i].norm() < kOnSurfaceTol)
            throw InputError("cone configuration contains the apex at vertex " +
                             std::to_string(i + 1));
    }
}

}  // namespace

Framework::Framework(Graph g, Surface s, Config c)
    : graph(std::move(g)), surface(s), config(std::move(c)) {
    if (static_cast<int>(config.size()) != graph.vertex_count())
        throw InputError("configuration size does not match vertex count");
    validate_on_surface(surface, config);
}

Framework::Framework(Graph g, Surface s, std::vector<Vec3Q> rc)
    : graph(std::move(g)), surface(s) {
    if (static_cast<int>(rc.size()) != graph.vertex_count())
        throw InputError("configuration size does not match vertex count");
    for (std::size_t i = 0; i < rc.size(); ++i) {
        if (h_exact(surface, rc[i]) != 0)
            throw InputError("rational configuration is not exactly on the surface at vertex " +
                             std::to_string(i + 1));
        if (surface.kind == SurfaceKind::Cone && rc[i][0] == 0 && rc[i][1] == 0 && rc[i][2] == 0)
            throw InputError("cone configuration contains the apex at vertex " +
                             std::to_string(i + 1));
    }
    config = rational_to_double(rc);
    rational_config = std::move(rc);
}

Eigen::VectorXd Framework::flat_config() const {
    Eigen::VectorXd p(3 * config.size());
    for (std::size_t i = 0; i < config.size(); ++i) p.segment<3>(3 * i) = config[i];
    return p;
}

std::vector<double> edge_lengths(const Framework& fw) {
    std::vector<double> out;
    out.reserve(fw.graph.edge_count());
    for (const Edge& e : fw.graph.edges())
        out.push_back((fw.config[e.u] - fw.config[e.v]).squaredNorm());
    return out;
}

std::vector<int> pinned_coordinates(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::Sphere:
            return {0, 2, 3};  // x1, z1, x2
        case SurfaceKind::Cylinder:
            return {0, 2};  // x1, z1
        case SurfaceKind::Cone:
            return {0};  // x1
        case SurfaceKind::Ellipsoid:
            return {};
    }
    throw InputError("unknown surface kind");
}

RigidityMatrices build_matrices(const Framework& fw) {
    const int n = fw.vertex_count();
    const int m = fw.graph.edge_count();
    const auto pins = pinned_coordinates(fw.surface.kind);
    const int ell = static_cast<int>(pins.size());

    RigidityMatrices mats;
    mats.dF = Eigen::MatrixXd::Zero(m + n, 3 * n);
    for (int i = 0; i < m; ++i) {
        const Edge& e = fw.graph.edges()[i];
        const Vec3 d = 2.0 * (fw.config[e.u] - fw.config[e.v]);
        mats.dF.block<1, 3>(i, 3 * e.u) = d.transpose();
        mats.dF.block<1, 3>(i, 3 * e.v) = -d.transpose();
    }
    for (int i = 0; i < n; ++i)
        mats.dF.block<1, 3>(m + i, 3 * i) = grad_h(fw.surface, fw.config[i]).transpose();

    mats.dFstar = Eigen::MatrixXd::Zero(m + n + ell, 3 * n);
    mats.dFstar.topRows(m + n) = mats.dF;
    for (int i = 0; i < ell; ++i) mats.dFstar(m + n + i, pins[i]) = 1.0;
    return mats;
}

namespace {

const std::vector<Vec3Q>& require_rational(const Framework& fw) {
    if (!fw.rational_config)
        throw InputError("framework carries no rational configuration");
    return *fw.rational_config;
}

}  // namespace

std::vector<std::vector<BigRational>> build_dF_exact(const Framework& fw) {
    const auto& rc = require_rational(fw);
    const int n = fw.vertex_count();
    const int m = fw.graph.edge_count();
    std::vector<std::vector<BigRational>> mat(m + n,
                                              std::vector<BigRational>(3 * n, BigRational(0)));
    for (int i = 0; i < m; ++i) {
        const Edge& e = fw.graph.edges()[i];
        for (int c = 0; c < 3; ++c) {
            const BigRational d = 2 * (rc[e.u][c] - rc[e.v][c]);
            mat[i][3 * e.u + c] = d;
            mat[i][3 * e.v + c] = -d;
        }
    }
    for (int i = 0; i < n; ++i) {
        const Vec3Q grad = grad_h_exact(fw.surface, rc[i]);
        for (int c = 0; c < 3; ++c) mat[m + i][3 * i + c] = grad[c];
    }
    return mat;
}

std::vector<std::vector<BigRational>> build_dFstar_exact(const Framework& fw) {
    auto mat = build_dF_exact(fw);
    const int n = fw.vertex_count();
    for (int pin : pinned_coordinates(fw.surface.kind)) {
        std::vector<BigRational> row(3 * n, BigRational(0));
        row[pin] = 1;
        mat.push_back(std::move(row));
    }
    return mat;
}

namespace {

// gap factor around the rank threshold inside which a singular value makes
// the decision suspect
constexpr double kBorderlineGap = 1e3;

RankResult rank_of_singular_values(const Eigen::VectorXd& sv, double tol) {
    RankResult res;
    if (sv.size() == 0) return res;
    const double top = sv(0);
    if (top <= 0.0) return res;
    const double threshold = tol * top;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++res.rank;
        if (sv(i) > threshold / kBorderlineGap && sv(i) < threshold * kBorderlineGap)
            res.borderline = true;
    }
    return res;
}

}  // namespace

int numeric_rank(const Eigen::MatrixXd& mat, double tol) {
    return numeric_rank_checked(mat, tol).rank;
}

RankResult numeric_rank_checked(const Eigen::MatrixXd& mat, double tol) {
    if (tol <= 0.0) throw InputError("rank tolerance must be positive");
    if (mat.rows() == 0 || mat.cols() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
    return rank_of_singular_values(svd.singularValues(), tol);
}

int exact_rank(std::vector<std::vector<BigRational>> mat) {
    const int rows = static_cast<int>(mat.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(mat[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (mat[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(mat[rank], mat[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (mat[r][col] == 0) continue;
            const BigRational factor = mat[r][col] / mat[rank][col];
            for (int c = col; c < cols; ++c) mat[r][c] -= factor * mat[rank][c];
        }
        ++rank;
    }
    return rank;
}

namespace {

// exact trivial flex basis as columns of a (3n x ell) rational matrix
std::vector<std::vector<BigRational>> trivial_basis_exact(const Surface& s,
                                                          const std::vector<Vec3Q>& rc) {
    const int n = static_cast<int>(rc.size());
    std::vector<std::vector<BigRational>> cols;
    auto field_column = [&](auto&& field) {
        std::vector<BigRational> col(3 * n, BigRational(0));
        for (int i = 0; i < n; ++i) {
            const Vec3Q f = field(rc[i]);
            for (int c = 0; c < 3; ++c) col[3 * i + c] = f[c];
        }
        cols.push_back(std::move(col));
    };
    const auto rot_z = [](const Vec3Q& p) -> Vec3Q { return {-p[1], p[0], BigRational(0)}; };
    switch (s.kind) {
        case SurfaceKind::Sphere:
            field_column([](const Vec3Q& p) -> Vec3Q { return {BigRational(0), -p[2], p[1]}; });
            field_column([](const Vec3Q& p) -> Vec3Q { return {p[2], BigRational(0), -p[0]}; });
            field_column([](const Vec3Q& p) -> Vec3Q { return {-p[1], p[0], BigRational(0)}; });
            break;
        case SurfaceKind::Cylinder:
            field_column(rot_z);
            field_column([](const Vec3Q&) -> Vec3Q {
                return {BigRational(0), BigRational(0), BigRational(1)};
            });
            break;
        case SurfaceKind::Cone:
            field_column(rot_z);
            break;
        case SurfaceKind::Ellipsoid:
            break;
    }
    // transpose to rows-of-matrix form for exact_rank (rank is transpose
    // invariant, so feed the ell x 3n layout directly)
    return cols;
}

int trivial_dim_numeric(const Surface& s, const Config& config, double tol) {
    const auto basis = trivial_flex_basis(s, config);
    if (basis.empty()) return 0;
    Eigen::MatrixXd T(basis[0].size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) T.col(j) = basis[j];
    return numeric_rank(T, tol);
}

struct RankBundle {
    int rank_dF = 0;
    int rank_dFstar = 0;
    int trivial_dim = 0;
    bool borderline = false;
};

RankBundle compute_ranks(const Framework& fw, double tol) {
    RankBundle out;
    if (fw.rational_config) {
        out.rank_dF = exact_rank(build_dF_exact(fw));
        out.rank_dFstar = exact_rank(build_dFstar_exact(fw));
        out.trivial_dim = exact_rank(trivial_basis_exact(fw.surface, *fw.rational_config));
        return out;
    }
    const RigidityMatrices mats = build_matrices(fw);
    const RankResult r = numeric_rank_checked(mats.dF, tol);
    out.rank_dF = r.rank;
    out.rank_dFstar = numeric_rank(mats.dFstar, tol);
    out.trivial_dim = trivial_dim_numeric(fw.surface, fw.config, tol);
    out.borderline = r.borderline;
    return out;
}

RigidityReport classify_impl(const Framework& fw, double tol, bool* borderline) {
    const int n = fw.vertex_count();
    const int m = fw.graph.edge_count();
    const int ell = surface_meta(fw.surface.kind).ell;
    const RankBundle ranks = compute_ranks(fw, tol);
    if (borderline) *borderline = ranks.borderline;

    RigidityReport rep;
    rep.rank_dF = ranks.rank_dF;
    rep.nullity = 3 * n - ranks.rank_dF;
    rep.trivial_dim = ranks.trivial_dim;
    rep.nontrivial_flex_dim = rep.nullity - rep.trivial_dim;
    rep.is_infinitesimally_rigid = (ranks.rank_dF == 3 * n - ell);
    rep.is_independent = (ranks.rank_dF == m + n);
    rep.is_isostatic =
        rep.is_infinitesimally_rigid && rep.is_independent && (m == 2 * n - ell);
    const bool small_complete = fw.graph.is_complete() && n <= 5 - ell;
    rep.is_rigid_generic = small_complete || rep.is_infinitesimally_rigid;
    return rep;
}

}  // namespace

RigidityReport classify(const Framework& fw, double tol) {
    return classify_impl(fw, tol, nullptr);
}

RigidityReport classify_generic(const Graph& g, const Surface& s, std::uint64_t seed, int trials,
                                double tol) {
    bool borderline = false;
    const Framework first(g, s, sample_config(s, g.vertex_count(), derive_seed(seed, 0)));
    RigidityReport rep = classify_impl(first, tol, &borderline);
    if (!borderline || trials <= 1) return rep;

    std::vector<RigidityReport> votes;
    for (int t = 0; t < trials; ++t) {
        const Framework fw(g, s, sample_config(s, g.vertex_count(), derive_seed(seed, t + 1)));
        votes.push_back(classify_impl(fw, tol, nullptr));
    }
    std::sort(votes.begin(), votes.end(),
              [](const RigidityReport& a, const RigidityReport& b) { return a.rank_dF < b.rank_dF; });
    RigidityReport winner = votes[votes.size() / 2];
    if (votes.front().rank_dF != votes.back().rank_dF) winner.warning = "degenerate sample";
    return winner;
}

bool is_redundantly_rigid(const Framework& fw, int trials, std::uint64_t seed, double tol) {
    const auto& edges = fw.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Graph sub = fw.graph.without_edge(edges[i]);
        bool borderline = false;
        bool rigid;
        if (fw.rational_config) {
            const Framework subfw(sub, fw.surface, *fw.rational_config);
            rigid = classify_impl(subfw, tol, nullptr).is_rigid_generic;
        } else {
            const Framework subfw(sub, fw.surface, fw.config);
            rigid = classify_impl(subfw, tol, &borderline).is_rigid_generic;
        }
        if (borderline && trials > 0) {
            int yes = 0;
            for (int t = 0; t < trials; ++t) {
                const Framework resampled(
                    sub, fw.surface,
                    sample_config(fw.surface, fw.vertex_count(),
                                  derive_seed(seed, (i + 1) * 64 + t)));
                if (classify_impl(resampled, tol, nullptr).is_rigid_generic) ++yes;
            }
            rigid = 2 * yes > trials;
        }
        if (!rigid) return false;
    }
    return true;
}

std::optional<Eigen::VectorXd> nontrivial_flex(const Framework& fw, double tol) {
    const RigidityMatrices mats = build_matrices(fw);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mats.dF, Eigen::ComputeFullV);
    const RankResult r = rank_of_singular_values(svd.singularValues(), tol);
    const int dim = 3 * fw.vertex_count();
    const int nullity = dim - r.rank;
    if (nullity <= 0) return std::nullopt;
    const Eigen::MatrixXd N = svd.matrixV().rightCols(nullity);

    const auto basis = trivial_flex_basis(fw.surface, fw.config);
    Eigen::MatrixXd M = N;
    if (!basis.empty()) {
        Eigen::MatrixXd T(dim, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) T.col(j) = basis[j];
        const Eigen::HouseholderQR<Eigen::MatrixXd> qr(T);
        const Eigen::MatrixXd Q =
            qr.householderQ() * Eigen::MatrixXd::Identity(dim, basis.size());
        M = N - Q * (Q.transpose() * N);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> msvd(M, Eigen::ComputeFullU);
    if (msvd.singularValues()(0) < 1e-8) return std::nullopt;
    Eigen::VectorXd flex = msvd.matrixU().col(0);
    flex.normalize();
    return flex;
}

}  // namespace rigidity
