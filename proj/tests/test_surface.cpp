#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rigidity/rng.hpp"
#include "rigidity/surface.hpp"

using namespace rigidity;

namespace {

const Surface kSphere{SurfaceKind::Sphere};
const Surface kCylinder{SurfaceKind::Cylinder};
const Surface kCone{SurfaceKind::Cone};
const Surface kEllipsoid{SurfaceKind::Ellipsoid, {2, 1}, {3, 1}};

const std::vector<Surface> kAllSurfaces = {kSphere, kCylinder, kCone, kEllipsoid};

double max_pairwise_distance_change(const Config& p, const Config& q) {
    double worst = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            worst = std::max(worst, std::abs((p[i] - p[j]).norm() - (q[i] - q[j]).norm()));
    return worst;
}

}  // namespace

TEST_CASE("surface constants") {
    CHECK(surface_meta(SurfaceKind::Sphere).ell == 3);
    CHECK(surface_meta(SurfaceKind::Cylinder).ell == 2);
    CHECK(surface_meta(SurfaceKind::Cone).ell == 1);
    CHECK(surface_meta(SurfaceKind::Ellipsoid).ell == 0);

    CHECK(surface_meta(SurfaceKind::Sphere).gamma == 0);
    CHECK(surface_meta(SurfaceKind::Cylinder).gamma == 1);
    CHECK(surface_meta(SurfaceKind::Cone).gamma == 2);
    CHECK(surface_meta(SurfaceKind::Ellipsoid).gamma == 2);

    CHECK(surface_meta(SurfaceKind::Sphere).k_conn == 3);
    CHECK(surface_meta(SurfaceKind::Cylinder).k_conn == 2);
    CHECK(surface_meta(SurfaceKind::Cone).k_conn == 2);
    CHECK(surface_meta(SurfaceKind::Ellipsoid).k_conn == 1);
}

TEST_CASE("ellipsoid parameters must satisfy 1 < a < b") {
    CHECK_THROWS_AS(Surface(SurfaceKind::Ellipsoid, {1, 1}, {3, 1}), InputError);
    CHECK_THROWS_AS(Surface(SurfaceKind::Ellipsoid, {3, 1}, {2, 1}), InputError);
    CHECK_NOTHROW(Surface(SurfaceKind::Ellipsoid, {3, 2}, {7, 4}));
}

TEST_CASE("constraint values at hand-picked points") {
    CHECK(h(kSphere, {0, 1, 0}) == doctest::Approx(0.0));
    CHECK(h(kCone, {1, 0, 1}) == doctest::Approx(0.0));
    CHECK(h(kEllipsoid, {0, 0, 1}) == doctest::Approx(2.0));
    CHECK(h(kCylinder, {0, 1, 5}) == doctest::Approx(0.0));
}

TEST_CASE("gradients at hand-picked points") {
    CHECK((grad_h(kSphere, {0, 1, 0}) - Vec3(0, 2, 0)).norm() == doctest::Approx(0.0));
    CHECK((grad_h(kCone, {1, 0, 1}) - Vec3(2, 0, -2)).norm() == doctest::Approx(0.0));
    CHECK((grad_h(kCylinder, {0, 1, 5}) - Vec3(0, 2, 0)).norm() == doctest::Approx(0.0));
    CHECK((grad_h(kEllipsoid, {1, 1, 1}) - Vec3(2, 4, 6)).norm() == doctest::Approx(0.0));
}

TEST_CASE("gradients match central finite differences") {
    const double delta = 1e-5;
    for (const Surface& s : kAllSurfaces) {
        Rng rng(derive_seed(101, static_cast<int>(s.kind)));
        for (int trial = 0; trial < 100; ++trial) {
            const Vec3 p(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
            const Vec3 grad = grad_h(s, p);
            for (int c = 0; c < 3; ++c) {
                Vec3 hi = p, lo = p;
                hi(c) += delta;
                lo(c) -= delta;
                const double fd = (h(s, hi) - h(s, lo)) / (2 * delta);
                CHECK(std::abs(fd - grad(c)) <= 1e-6 * std::max(1.0, std::abs(grad(c))));
            }
        }
    }
}

TEST_CASE("trivial flex basis sizes and tangency") {
    for (const Surface& s : kAllSurfaces) {
        const Config config = sample_config(s, 5, 42);
        const auto basis = trivial_flex_basis(s, config);
        CHECK(static_cast<int>(basis.size()) == surface_meta(s.kind).ell);
        for (const auto& t : basis)
            for (int i = 0; i < 5; ++i)
                CHECK(std::abs(grad_h(s, config[i]).dot(t.segment<3>(3 * i))) <= 1e-9);
    }
}

TEST_CASE("trivial flexes on single points") {
    const auto cyl = trivial_flex_basis(kCylinder, {Vec3(0, 1, 0)});
    REQUIRE(cyl.size() == 2);
    CHECK((cyl[0] - Eigen::Vector3d(-1, 0, 0)).norm() == doctest::Approx(0.0));
    CHECK((cyl[1] - Eigen::Vector3d(0, 0, 1)).norm() == doctest::Approx(0.0));

    // the three sphere rotation fields at a single point span only a plane
    const auto sph = trivial_flex_basis(kSphere, {Vec3(0, 1, 0)});
    REQUIRE(sph.size() == 3);
    Eigen::Matrix3d cross_fields;
    for (int i = 0; i < 3; ++i) cross_fields.row(i) = sph[i].transpose();
    CHECK(cross_fields.fullPivLu().rank() == 2);

    CHECK(trivial_flex_basis(kEllipsoid, sample_config(kEllipsoid, 3, 7)).empty());
    CHECK_THROWS_AS(trivial_flex_basis(kCone, {Vec3(0, 0, 0)}), InputError);
}

TEST_CASE("standard position on hand-picked configurations") {
    // cylinder: already standard stays put
    const Config cyl_std = {Vec3(0, 1, 0), Vec3(1, 0, 1.5)};
    const Config moved = to_standard_position(kCylinder, cyl_std);
    CHECK(max_pairwise_distance_change(cyl_std, moved) <= 1e-12);
    for (int i = 0; i < 2; ++i) CHECK((moved[i] - cyl_std[i]).norm() <= 1e-12);

    // ellipsoid: identity
    const Config ell = sample_config(kEllipsoid, 4, 3);
    const Config ell_std = to_standard_position(kEllipsoid, ell);
    for (int i = 0; i < 4; ++i) CHECK((ell[i] - ell_std[i]).norm() == 0.0);

    // sphere: v1 lands on (0,1,0), x2 becomes 0 with z2 >= 0
    const Config sph = {Vec3(1, 0, 0), Vec3(0, 0, 1)};
    const Config sph_std = to_standard_position(kSphere, sph);
    CHECK((sph_std[0] - Vec3(0, 1, 0)).norm() <= 1e-12);
    CHECK(std::abs(sph_std[1].x()) <= 1e-12);
    CHECK(sph_std[1].z() >= 0.0);
    CHECK(max_pairwise_distance_change(sph, sph_std) <= 1e-10);
}

TEST_CASE("standard position properties on sampled configurations") {
    for (const Surface& s : kAllSurfaces) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Config config = sample_config(s, 5, derive_seed(301, seed));
            const Config std1 = to_standard_position(s, config);
            CHECK(max_pairwise_distance_change(config, std1) <= 1e-10);
            for (const Vec3& p : std1) CHECK(std::abs(h(s, p)) <= 1e-10);
            const Config std2 = to_standard_position(s, std1);
            for (std::size_t i = 0; i < std1.size(); ++i)
                CHECK((std1[i] - std2[i]).norm() <= 1e-10);
        }
    }
}

TEST_CASE("standard position pins land on their standard values") {
    const Config sph = to_standard_position(kSphere, sample_config(kSphere, 4, 11));
    CHECK(std::abs(sph[0].x()) <= 1e-12);
    CHECK(std::abs(sph[0].z()) <= 1e-12);
    CHECK(std::abs(sph[0].y() - 1.0) <= 1e-12);
    CHECK(std::abs(sph[1].x()) <= 1e-12);

    const Config cyl = to_standard_position(kCylinder, sample_config(kCylinder, 4, 12));
    CHECK(std::abs(cyl[0].x()) <= 1e-12);
    CHECK(std::abs(cyl[0].y() - 1.0) <= 1e-12);
    CHECK(std::abs(cyl[0].z()) <= 1e-12);

    const Config cone = to_standard_position(kCone, sample_config(kCone, 4, 13));
    CHECK(std::abs(cone[0].x()) <= 1e-12);
    CHECK(cone[0].y() > 0.0);
}

TEST_CASE("standard position degenerate inputs") {
    CHECK_THROWS_AS(to_standard_position(kSphere, {Vec3(0, 1, 0)}), InputError);
    // second vertex on the +-y axis leaves the y-rotation undefined
    CHECK_THROWS_AS(to_standard_position(kSphere, {Vec3(1, 0, 0), Vec3(-1, 0, 0)}), InputError);
    CHECK_THROWS_AS(to_standard_position(kCone, {Vec3(0, 0, 0)}), InputError);
    // antipodal first vertex resolves through the documented tie-break
    const Config anti = to_standard_position(kSphere, {Vec3(0, -1, 0), Vec3(1, 0, 0)});
    CHECK((anti[0] - Vec3(0, 1, 0)).norm() <= 1e-12);
}

TEST_CASE("sampler stays on-surface and is deterministic") {
    for (const Surface& s : kAllSurfaces) {
        const Config a = sample_config(s, 6, 987);
        const Config b = sample_config(s, 6, 987);
        const Config c = sample_config(s, 6, 988);
        double diff_seeds = 0.0;
        for (int i = 0; i < 6; ++i) {
            CHECK(std::abs(h(s, a[i])) <= 1e-12);
            CHECK((a[i] - b[i]).norm() == 0.0);
            diff_seeds += (a[i] - c[i]).norm();
        }
        CHECK(diff_seeds > 1e-3);
    }
}

TEST_CASE("cone sampler respects the radius band and avoids the apex") {
    const Config config = sample_config(kCone, 5, 555);
    for (const Vec3& p : config) {
        const double r = std::hypot(p.x(), p.y());
        CHECK(r >= 0.5);
        CHECK(r <= 2.0);
        CHECK(std::abs(std::abs(p.z()) - r) <= 1e-12);
    }
    for (const Vec3& p : sample_config(kCylinder, 20, 556)) {
        CHECK(p.z() >= -2.0);
        CHECK(p.z() <= 2.0);
    }
}

TEST_CASE("rational sampler produces exact surface points") {
    for (const Surface& s : kAllSurfaces) {
        const auto rc = sample_rational_config(s, 5, 321);
        for (const Vec3Q& p : rc) CHECK(h_exact(s, p) == 0);
        const auto rc2 = sample_rational_config(s, 5, 321);
        for (int i = 0; i < 5; ++i)
            for (int c = 0; c < 3; ++c) CHECK(rc[i][c] == rc2[i][c]);
    }
}

TEST_CASE("random isometries preserve the surface and distances") {
    for (const Surface& s : kAllSurfaces) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Config config = sample_config(s, 5, derive_seed(771, seed));
            const Isometry iso = random_isometry(s, derive_seed(772, seed));
            const Config mapped = iso.apply(config);
            for (const Vec3& p : mapped) CHECK(std::abs(h(s, p)) <= 1e-9);
            CHECK(max_pairwise_distance_change(config, mapped) <= 1e-10);
        }
    }
}
