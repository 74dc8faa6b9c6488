#include "rigidity/surface.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "rigidity/rng.hpp"

namespace rigidity {

Surface::Surface(SurfaceKind k, Rat64 a_, Rat64 b_) : kind(k), a(a_), b(b_) {
    if (kind == SurfaceKind::Ellipsoid) {
        const Rat64 one{1, 1};
        if (!(one < a && a < b))
            throw InputError("ellipsoid parameters must satisfy 1 < a < b");
    }
}

SurfaceMeta surface_meta(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::Sphere:
            return {3, 0, 3};
        case SurfaceKind::Cylinder:
            return {2, 1, 2};
        case SurfaceKind::Cone:
            return {1, 2, 2};
        case SurfaceKind::Ellipsoid:
            return {0, 2, 1};
    }
    throw InputError("unknown surface kind");
}

const char* surface_name(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::Sphere:
            return "sphere";
        case SurfaceKind::Cylinder:
            return "cylinder";
        case SurfaceKind::Cone:
            return "cone";
        case SurfaceKind::Ellipsoid:
            return "ellipsoid";
    }
    throw InputError("unknown surface kind");
}

SurfaceKind surface_kind_from_name(const std::string& name) {
    if (name == "sphere") return SurfaceKind::Sphere;
    if (name == "cylinder") return SurfaceKind::Cylinder;
    if (name == "cone") return SurfaceKind::Cone;
    if (name == "ellipsoid") return SurfaceKind::Ellipsoid;
    throw InputError("unknown surface kind: " + name);
}

double h(const Surface& s, const Vec3& p) {
    switch (s.kind) {
        case SurfaceKind::Sphere:
            return p.x() * p.x() + p.y() * p.y() + p.z() * p.z() - 1.0;
        case SurfaceKind::Cylinder:
            return p.x() * p.x() + p.y() * p.y() - 1.0;
        case SurfaceKind::Cone:
            return p.x() * p.x() + p.y() * p.y() - p.z() * p.z();
        case SurfaceKind::Ellipsoid:
            return p.x() * p.x() + s.a_val() * p.y() * p.y() + s.b_val() * p.z() * p.z() - 1.0;
    }
    throw InputError("unknown surface kind");
}

Vec3 grad_h(const Surface& s, const Vec3& p) {
    switch (s.kind) {
        case SurfaceKind::Sphere:
            return 2.0 * Vec3(p.x(), p.y(), p.z());
        case SurfaceKind::Cylinder:
            return 2.0 * Vec3(p.x(), p.y(), 0.0);
        case SurfaceKind::Cone:
            return 2.0 * Vec3(p.x(), p.y(), -p.z());
        case SurfaceKind::Ellipsoid:
            return 2.0 * Vec3(p.x(), s.a_val() * p.y(), s.b_val() * p.z());
    }
    throw InputError("unknown surface kind");
}

BigRational h_exact(const Surface& s, const Vec3Q& p) {
    const BigRational &x = p[0], &y = p[1], &z = p[2];
    switch (s.kind) {
        case SurfaceKind::Sphere:
            return x * x + y * y + z * z - 1;
        case SurfaceKind::Cylinder:
            return x * x + y * y - 1;
        case SurfaceKind::Cone:
            return x * x + y * y - z * z;
        case SurfaceKind::Ellipsoid:
            return x * x + s.a.big() * y * y + s.b.big() * z * z - 1;
    }
    throw InputError("unknown surface kind");
}

Vec3Q grad_h_exact(const Surface& s, const Vec3Q& p) {
    const BigRational &x = p[0], &y = p[1], &z = p[2];
    switch (s.kind) {
        case SurfaceKind::Sphere:
            return {2 * x, 2 * y, 2 * z};
        case SurfaceKind::Cylinder:
            return {2 * x, 2 * y, BigRational(0)};
        case SurfaceKind::Cone:
            return {2 * x, 2 * y, -2 * z};
        case SurfaceKind::Ellipsoid:
            return {2 * x, 2 * s.a.big() * y, 2 * s.b.big() * z};
    }
    throw InputError("unknown surface kind");
}

namespace {

constexpr double kApexTol = 1e-9;

void require_no_apex(const Config& config) {
    for (std::size_t i = 0; i < config.size(); ++i)
        if (config[i].norm() < kApexTol)
            throw InputError("cone configuration contains the apex at vertex " +
                             std::to_string(i + 1));
}

Eigen::VectorXd flatten_field(const Config& config, const std::function<Vec3(const Vec3&)>& field) {
    Eigen::VectorXd v(3 * config.size());
    for (std::size_t i = 0; i < config.size(); ++i) v.segment<3>(3 * i) = field(config[i]);
    return v;
}

}  // namespace

std::vector<Eigen::VectorXd> trivial_flex_basis(const Surface& s, const Config& config) {
    const auto rot_z = [](const Vec3& p) { return Vec3(-p.y(), p.x(), 0.0); };
    std::vector<Eigen::VectorXd> basis;
    switch (s.kind) {
        case SurfaceKind::Sphere:
            for (int axis = 0; axis < 3; ++axis) {
                const Vec3 e = Vec3::Unit(axis);
                basis.push_back(flatten_field(config, [&e](const Vec3& p) { return e.cross(p); }));
            }
            break;
        case SurfaceKind::Cylinder:
            basis.push_back(flatten_field(config, rot_z));
            basis.push_back(flatten_field(config, [](const Vec3&) { return Vec3(0, 0, 1); }));
            break;
        case SurfaceKind::Cone:
            require_no_apex(config);
            basis.push_back(flatten_field(config, rot_z));
            break;
        case SurfaceKind::Ellipsoid:
            break;
    }
    return basis;
}

namespace {

// rotation about z taking the direction (x, y) to (0, +r)
Eigen::Matrix3d align_xy_to_plus_y(double x, double y) {
    const double r = std::hypot(x, y);
    const double c = y / r, sn = x / r;
    Eigen::Matrix3d rot;
    rot << c, -sn, 0, sn, c, 0, 0, 0, 1;
    return rot;
}

}  // namespace

Config Isometry::apply(const Config& config) const {
    Config out(config.size());
    for (std::size_t i = 0; i < config.size(); ++i) out[i] = (*this)(config[i]);
    return out;
}

Config to_standard_position(const Surface& s, const Config& config) {
    if (config.empty()) throw InputError("empty configuration");
    Isometry iso;
    switch (s.kind) {
        case SurfaceKind::Sphere: {
            if (config.size() < 2)
                throw InputError("sphere standard position needs at least two vertices");
            const Vec3 p1 = config[0];
            Eigen::Matrix3d first;
            if (p1.dot(Vec3(0, 1, 0)) < -1.0 + 1e-12) {
                // antipodal tie-break: half turn about z
                first = Eigen::AngleAxisd(M_PI, Vec3::UnitZ()).toRotationMatrix();
            } else {
                first = Eigen::Quaterniond::FromTwoVectors(p1, Vec3(0, 1, 0)).toRotationMatrix();
            }
            const Vec3 q2 = first * config[1];
            const double r = std::hypot(q2.x(), q2.z());
            if (r < 1e-12)
                throw InputError(
                    "sphere standard position undefined: second vertex on the +-y axis");
            // rotate about y so x2 = 0 and z2 = r >= 0
            const double c = q2.z() / r, sn = -q2.x() / r;
            Eigen::Matrix3d second;
            second << c, 0, sn, 0, 1, 0, -sn, 0, c;
            iso.rotation = second * first;
            break;
        }
        case SurfaceKind::Cylinder: {
            iso.rotation = align_xy_to_plus_y(config[0].x(), config[0].y());
            iso.translation = Vec3(0, 0, -config[0].z());
            break;
        }
        case SurfaceKind::Cone: {
            require_no_apex(config);
            iso.rotation = align_xy_to_plus_y(config[0].x(), config[0].y());
            break;
        }
        case SurfaceKind::Ellipsoid:
            return config;
    }
    return iso.apply(config);
}

Config sample_config(const Surface& s, int n, std::uint64_t seed) {
    if (n <= 0) throw InputError("sample size must be positive");
    Rng rng(derive_seed(seed, 0x5u));
    Config config(n);
    for (int i = 0; i < n; ++i) {
        switch (s.kind) {
            case SurfaceKind::Sphere: {
                Vec3 g(rng.gaussian(), rng.gaussian(), rng.gaussian());
                while (g.norm() < 1e-6) g = Vec3(rng.gaussian(), rng.gaussian(), rng.gaussian());
                config[i] = g / g.norm();
                break;
            }
            case SurfaceKind::Cylinder: {
                const double phi = rng.uniform(0.0, 2.0 * M_PI);
                config[i] = Vec3(std::cos(phi), std::sin(phi), rng.uniform(-2.0, 2.0));
                break;
            }
            case SurfaceKind::Cone: {
                const double phi = rng.uniform(0.0, 2.0 * M_PI);
                const double r = rng.uniform(0.5, 2.0);
                const double sign = rng.coin() ? 1.0 : -1.0;
                config[i] = Vec3(r * std::cos(phi), r * std::sin(phi), sign * r);
                break;
            }
            case SurfaceKind::Ellipsoid: {
                Vec3 g(rng.gaussian(), rng.gaussian(), rng.gaussian());
                while (g.norm() < 1e-6) g = Vec3(rng.gaussian(), rng.gaussian(), rng.gaussian());
                g /= g.norm();
                config[i] =
                    Vec3(g.x(), g.y() / std::sqrt(s.a_val()), g.z() / std::sqrt(s.b_val()));
                break;
            }
        }
    }
    return config;
}

namespace {

BigRational random_rational(Rng& rng, std::int64_t max_num, std::int64_t max_den) {
    return BigRational(rng.uniform_int(-max_num, max_num), rng.uniform_int(1, max_den));
}

// rational point on the unit circle via the tangent half-angle map
std::pair<BigRational, BigRational> rational_circle_point(Rng& rng) {
    const BigRational t = random_rational(rng, 40, 12);
    const BigRational d = 1 + t * t;
    return {(1 - t * t) / d, 2 * t / d};
}

}  // namespace

std::vector<Vec3Q> sample_rational_config(const Surface& s, int n, std::uint64_t seed) {
    if (n <= 0) throw InputError("sample size must be positive");
    Rng rng(derive_seed(seed, 0x7u));
    std::vector<Vec3Q> config(n);
    for (int i = 0; i < n; ++i) {
        switch (s.kind) {
            case SurfaceKind::Sphere: {
                // stereographic: (2u, 2v, u^2+v^2-1) / (u^2+v^2+1)
                const BigRational u = random_rational(rng, 30, 10);
                const BigRational v = random_rational(rng, 30, 10);
                const BigRational d = u * u + v * v + 1;
                config[i] = {2 * u / d, 2 * v / d, (u * u + v * v - 1) / d};
                break;
            }
            case SurfaceKind::Cylinder: {
                auto [c, sn] = rational_circle_point(rng);
                config[i] = {c, sn, random_rational(rng, 20, 10)};
                break;
            }
            case SurfaceKind::Cone: {
                auto [c, sn] = rational_circle_point(rng);
                const BigRational r =
                    BigRational(rng.uniform_int(1, 20), rng.uniform_int(1, 10)) + 1;
                const int sign = rng.coin() ? 1 : -1;
                config[i] = {r * c, r * sn, sign * r};
                break;
            }
            case SurfaceKind::Ellipsoid: {
                // chord through the rational point (1,0,0): the second
                // intersection with direction (p,q,r) is rational
                const BigRational aq = s.a.big(), bq = s.b.big();
                BigRational p(rng.uniform_int(1, 20));
                BigRational q(rng.uniform_int(-20, 20));
                BigRational r(rng.uniform_int(-20, 20));
                const BigRational denom = p * p + aq * q * q + bq * r * r;
                const BigRational t = -2 * p / denom;
                config[i] = {1 + t * p, t * q, t * r};
                break;
            }
        }
    }
    return config;
}

Isometry random_isometry(const Surface& s, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0xbu));
    Isometry iso;
    switch (s.kind) {
        case SurfaceKind::Sphere: {
            Eigen::Vector4d q(rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian());
            while (q.norm() < 1e-6)
                q = Eigen::Vector4d(rng.gaussian(), rng.gaussian(), rng.gaussian(),
                                    rng.gaussian());
            q /= q.norm();
            iso.rotation = Eigen::Quaterniond(q(0), q(1), q(2), q(3)).toRotationMatrix();
            break;
        }
        case SurfaceKind::Cylinder: {
            const double phi = rng.uniform(0.0, 2.0 * M_PI);
            iso.rotation = Eigen::AngleAxisd(phi, Vec3::UnitZ()).toRotationMatrix();
            iso.translation = Vec3(0, 0, rng.uniform(-1.5, 1.5));
            break;
        }
        case SurfaceKind::Cone: {
            const double phi = rng.uniform(0.0, 2.0 * M_PI);
            iso.rotation = Eigen::AngleAxisd(phi, Vec3::UnitZ()).toRotationMatrix();
            break;
        }
        case SurfaceKind::Ellipsoid: {
            Eigen::Vector3d signs;
            for (int i = 0; i < 3; ++i) signs(i) = rng.coin() ? 1.0 : -1.0;
            iso.rotation = signs.asDiagonal();
            break;
        }
    }
    return iso;
}

Config rational_to_double(const std::vector<Vec3Q>& config) {
    Config out(config.size());
    for (std::size_t i = 0; i < config.size(); ++i)
        out[i] = Vec3(to_double(config[i][0]), to_double(config[i][1]), to_double(config[i][2]));
    return out;
}

}  // namespace rigidity
