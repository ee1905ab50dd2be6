#include <doctest.h>

#include <cmath>

#include "wigkit/random.hpp"
#include "wigkit/rotation.hpp"

using namespace wigkit;

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm_inf3(const Vec3& v) {
    return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

// Independent oracle: the rotation matrix as the exponential of the axis
// generator, exp(theta K) summed term by term until the terms vanish. Shares
// nothing with the closed-form Rodrigues path.
Mat3 exp_axis_generator(const UnitVec3& n, double theta) {
    Mat3 K{};
    K.m = {{{0.0, -n.z(), n.y()}, {n.z(), 0.0, -n.x()}, {-n.y(), n.x(), 0.0}}};
    for (auto& row : K.m)
        for (auto& e : row) e *= theta;

    Mat3 result = Mat3::identity();
    Mat3 term = Mat3::identity();
    for (int k = 1; k < 64; ++k) {
        term = term * K;
        for (auto& row : term.m)
            for (auto& e : row) e /= k;
        double mag = 0.0;
        for (const auto& row : term.m)
            for (double e : row) mag = std::max(mag, std::abs(e));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) result.m[i][j] += term.m[i][j];
        if (mag < 1e-18) break;
    }
    return result;
}

} // namespace

TEST_CASE("UnitVec3 normalizes and rejects the zero vector") {
    const UnitVec3 v(3.0, 0.0, 4.0);
    CHECK(v.x() == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(v.z() == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(std::abs(v.vec().norm() - 1.0) < 1e-15);
    CHECK_THROWS_AS(UnitVec3(0.0, 0.0, 0.0), DegenerateDirections);
    CHECK_THROWS_AS(UnitVec3(1e-14, 0.0, 0.0), DegenerateDirections);
}

TEST_CASE("UnitVec3 polar/azimuth accessors invert the spherical parametrization") {
    const double xi = 1.1, psi = -2.3;
    const UnitVec3 v(std::sin(xi) * std::cos(psi), std::sin(xi) * std::sin(psi), std::cos(xi));
    CHECK(v.polar_angle() == doctest::Approx(xi).epsilon(1e-14));
    CHECK(v.azimuth_angle() == doctest::Approx(psi).epsilon(1e-14));
}

TEST_CASE("AxisAngleRotation canonicalizes the angle into [0, pi]") {
    const AxisAngleRotation r(UnitVec3::zhat(), 1.5 * kPi);
    CHECK(r.angle() == doctest::Approx(0.5 * kPi).epsilon(1e-15));
    CHECK(r.axis().z() == doctest::Approx(-1.0).epsilon(1e-15));

    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const AxisAngleRotation s(rng.unit_vector(), rng.uniform(-20.0, 20.0));
        CHECK(s.angle() >= 0.0);
        CHECK(s.angle() <= kPi);
    }
}

TEST_CASE("rodrigues_rotate basic cases") {
    const UnitVec3 z = UnitVec3::zhat();
    SUBCASE("zero angle is the identity") {
        const UnitVec3 out = rodrigues_rotate(z, AxisAngleRotation(UnitVec3(0.3, -0.2, 0.9), 0.0));
        CHECK(norm_inf3(out.vec() - z.vec()) < 1e-15);
    }
    SUBCASE("quarter turn about x sends z to -y") {
        const UnitVec3 out = rodrigues_rotate(z, AxisAngleRotation(UnitVec3::xhat(), 0.5 * kPi));
        CHECK(out.x() == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(out.y() == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(std::abs(out.z()) < 1e-15);
    }
    SUBCASE("half turn about the bisector swaps the endpoints") {
        const UnitVec3 p(1.0 / std::sqrt(2.0), 0.0, -1.0 / std::sqrt(2.0));
        const UnitVec3 bisector(z.vec() + p.vec());
        const UnitVec3 out = rodrigues_rotate(z, AxisAngleRotation(bisector, kPi));
        CHECK(norm_inf3(out.vec() - p.vec()) < 1e-12);
    }
}

TEST_CASE("rodrigues_rotate matches the matrix-exponential oracle") {
    Rng rng(101);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const UnitVec3 axis = rng.unit_vector();
        const double angle = rng.uniform(0.0, kPi);
        const UnitVec3 k = rng.unit_vector();
        const AxisAngleRotation rot(axis, angle);
        const Vec3 closed = rodrigues_rotate(k, rot).vec();
        const Vec3 series = exp_axis_generator(axis, angle) * k.vec();
        worst = std::max(worst, norm_inf3(closed - series));
        // the rotation matrix route must agree as well
        worst = std::max(worst, norm_inf3(rotation_matrix(rot) * k.vec() - closed));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("rodrigues_rotate preserves the axis projection") {
    Rng rng(102);
    for (int i = 0; i < 200; ++i) {
        const UnitVec3 axis = rng.unit_vector();
        const UnitVec3 k = rng.unit_vector();
        const AxisAngleRotation rot(axis, rng.uniform(0.0, kPi));
        const UnitVec3 out = rodrigues_rotate(k, rot);
        CHECK(std::abs(out.vec().norm() - 1.0) < 1e-15);
        CHECK(std::abs(out.dot(axis) - k.dot(axis)) < 1e-12);
    }
}

TEST_CASE("rotation_family_basis on the coordinate pair") {
    const RotationFamilyBasis b = rotation_family_basis(UnitVec3::zhat(), UnitVec3::xhat());
    // u1 = normalize(z x x) = +y; the definition fixes the sign.
    CHECK(norm_inf3(b.u1.vec() - Vec3{0, 1, 0}) < 1e-15);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(norm_inf3(b.u2.vec() - Vec3{s, 0, s}) < 1e-15);
    CHECK(norm_inf3(b.u3.vec() - Vec3{s, 0, -s}) < 1e-15);
}

TEST_CASE("rotation_family_basis is right-handed orthonormal") {
    Rng rng(103);
    for (int i = 0; i < 200; ++i) {
        const UnitVec3 k = rng.unit_vector();
        const UnitVec3 kp = rng.unit_vector();
        if (std::abs(k.dot(kp)) >= 1.0 - 1e-6) continue;
        const RotationFamilyBasis b = rotation_family_basis(k, kp);
        CHECK(std::abs(b.u1.dot(b.u2)) < 1e-12);
        CHECK(std::abs(b.u1.dot(b.u3)) < 1e-12);
        CHECK(std::abs(b.u2.dot(b.u3)) < 1e-12);
        CHECK(b.u1.cross(b.u2).dot(b.u3.vec()) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("rotation_family_basis rejects (anti)parallel directions") {
    CHECK_THROWS_AS(rotation_family_basis(UnitVec3::zhat(), UnitVec3::zhat()), DegenerateDirections);
    CHECK_THROWS_AS(rotation_family_basis(UnitVec3::zhat(), UnitVec3(0, 0, -1)), DegenerateDirections);
}

TEST_CASE("rotation_family_basis on the tilted example") {
    const UnitVec3 kp(std::sin(kPi / 4), 0.0, -std::cos(kPi / 4));
    const RotationFamilyBasis b = rotation_family_basis(UnitVec3::zhat(), kp);
    CHECK(norm_inf3(b.u1.vec() - Vec3{0, 1, 0}) < 1e-15);
    CHECK(norm_inf3(b.u2.vec() - UnitVec3(UnitVec3::zhat().vec() + kp.vec()).vec()) < 1e-15);
}

TEST_CASE("axis_from_theta special members") {
    const UnitVec3 z = UnitVec3::zhat();
    const UnitVec3 p(std::sin(kPi / 4), 0.0, -std::cos(kPi / 4));
    SUBCASE("theta = pi/2 is the perpendicular axis with the arc angle") {
        const AxisAngleRotation r = axis_from_theta(z, p, 0.5 * kPi);
        const RotationFamilyBasis b = rotation_family_basis(z, p);
        CHECK(norm_inf3(r.axis().vec() - b.u1.vec()) < 1e-14);
        CHECK(r.angle() == doctest::Approx(angle_between(z, p)).epsilon(1e-14));
    }
    SUBCASE("theta = 0 is the half turn about the bisector") {
        const AxisAngleRotation r = axis_from_theta(z, p, 0.0);
        const RotationFamilyBasis b = rotation_family_basis(z, p);
        CHECK(r.angle() == doctest::Approx(kPi).epsilon(1e-14));
        CHECK(norm_inf3(r.axis().vec() - b.u2.vec()) < 1e-14);
    }
    SUBCASE("theta = pi/3 still carries z onto p") {
        const AxisAngleRotation r = axis_from_theta(z, p, kPi / 3.0);
        CHECK(norm_inf3(rodrigues_rotate(z, r).vec() - p.vec()) < 1e-12);
    }
    SUBCASE("degenerate directions throw") {
        CHECK_THROWS_AS(axis_from_theta(z, z, 0.3), DegenerateDirections);
    }
}

TEST_CASE("axis_from_theta family correctness on a theta grid") {
    Rng rng(104);
    double worst = 0.0;
    for (int pair = 0; pair < 100; ++pair) {
        const UnitVec3 k = rng.unit_vector();
        UnitVec3 kp = rng.unit_vector();
        while (std::abs(k.dot(kp)) >= 1.0 - 1e-6) kp = rng.unit_vector();
        for (int g = 0; g < 64; ++g) {
            const double theta = kPi * (g + 0.5) / 64.0;
            const AxisAngleRotation r = axis_from_theta(k, kp, theta);
            worst = std::max(worst, norm_inf3(rodrigues_rotate(k, r).vec() - kp.vec()));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("axis_from_theta axes have no component along u3") {
    Rng rng(105);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        const UnitVec3 k = rng.unit_vector();
        UnitVec3 kp = rng.unit_vector();
        while (std::abs(k.dot(kp)) >= 1.0 - 1e-6) kp = rng.unit_vector();
        const double theta = rng.uniform(0.0, 2.0 * kPi);
        const AxisAngleRotation r = axis_from_theta(k, kp, theta);
        const RotationFamilyBasis b = rotation_family_basis(k, kp);
        worst = std::max(worst, std::abs(r.axis().dot(b.u3)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("quat_from_axis_angle fixed values") {
    const UnitQuaternion q0 = quat_from_axis_angle(AxisAngleRotation(UnitVec3(0.2, 0.5, -0.9), 0.0));
    CHECK(q0.w() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(q0.v().norm() < 1e-15);

    const UnitQuaternion qz = quat_from_axis_angle(AxisAngleRotation(UnitVec3::zhat(), kPi));
    CHECK(std::abs(qz.w()) < 1e-15);
    CHECK(qz.v().z == doctest::Approx(1.0).epsilon(1e-15));

    const UnitQuaternion qx = quat_from_axis_angle(AxisAngleRotation(UnitVec3::xhat(), 0.5 * kPi));
    CHECK(qx.w() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(qx.v().x == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("quat_product identity and same-axis composition") {
    const UnitQuaternion q = quat_from_axis_angle(AxisAngleRotation(UnitVec3(1, 2, 3), 0.7));
    const UnitQuaternion r = quat_product(UnitQuaternion::identity(), q);
    CHECK(r.w() == doctest::Approx(q.w()).epsilon(1e-15));
    CHECK(norm_inf3(r.v() - q.v()) < 1e-15);

    const UnitQuaternion h = quat_from_axis_angle(AxisAngleRotation(UnitVec3::zhat(), 0.5 * kPi));
    const AxisAngleRotation full = quat_product(h, h).to_axis_angle();
    CHECK(full.angle() == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(std::abs(full.axis().z()) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("quat_product scalar part matches the half-angle product formula") {
    Rng rng(106);
    for (int i = 0; i < 300; ++i) {
        const AxisAngleRotation r1(rng.unit_vector(), rng.uniform(0.0, kPi));
        const AxisAngleRotation r2(rng.unit_vector(), rng.uniform(0.0, kPi));
        const UnitQuaternion prod = quat_product(quat_from_axis_angle(r2), quat_from_axis_angle(r1));
        const double expected = std::cos(0.5 * r2.angle()) * std::cos(0.5 * r1.angle())
                              - r2.axis().dot(r1.axis()) * std::sin(0.5 * r2.angle())
                              * std::sin(0.5 * r1.angle());
        CHECK(prod.w() == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("quaternion axis-angle round trip is the identity") {
    Rng rng(107);
    for (int i = 0; i < 300; ++i) {
        const AxisAngleRotation r(rng.unit_vector(), rng.uniform(1e-6, kPi - 1e-6));
        const AxisAngleRotation back = quat_from_axis_angle(r).to_axis_angle();
        CHECK(std::abs(back.angle() - r.angle()) < 1e-12);
        CHECK(norm_inf3(back.axis().vec() - r.axis().vec()) < 1e-12);
    }
}

TEST_CASE("composite axis satisfies the tan-half-angle combination rule") {
    Rng rng(108);
    for (int i = 0; i < 300; ++i) {
        const AxisAngleRotation r1(rng.unit_vector(), rng.uniform(0.2, kPi - 0.5));
        const AxisAngleRotation r2(rng.unit_vector(), rng.uniform(0.2, kPi - 0.5));
        const double t1 = std::tan(0.5 * r1.angle());
        const double t2 = std::tan(0.5 * r2.angle());
        const double denom = 1.0 - r2.axis().dot(r1.axis()) * t2 * t1;
        if (std::abs(denom) <= 1e-9) continue;
        const Vec3 rhs = (r2.axis().vec() * t2 + r1.axis().vec() * t1 +
                          r2.axis().cross(r1.axis()) * (t2 * t1)) / denom;
        const AxisAngleRotation c =
            quat_product(quat_from_axis_angle(r2), quat_from_axis_angle(r1)).to_axis_angle();
        if (c.angle() >= kPi - 1e-6) continue; // tan blows up at the boundary
        const Vec3 lhs = c.axis().vec() * std::tan(0.5 * c.angle());
        CHECK(norm_inf3(lhs - rhs) < 1e-9 * (1.0 + rhs.norm()));
    }
}

TEST_CASE("wigner_angle_closed_form trivial reductions") {
    const AxisAngleRotation id = AxisAngleRotation::identity();
    CHECK(wigner_angle_closed_form(id, id, id) == doctest::Approx(0.0));

    // with r3 = identity the five-term expansion collapses to the two-factor rule
    Rng rng(109);
    for (int i = 0; i < 100; ++i) {
        const AxisAngleRotation r1(rng.unit_vector(), rng.uniform(0.1, kPi - 0.1));
        const AxisAngleRotation r2(rng.unit_vector(), rng.uniform(0.1, kPi - 0.1));
        const double five = composite_cos_half_angle(r1, r2, id);
        const double two = quat_product(quat_from_axis_angle(r2), quat_from_axis_angle(r1)).w();
        CHECK(five == doctest::Approx(two).epsilon(1e-12));
    }
}

TEST_CASE("five-term expansion equals the brute-force quaternion product") {
    Rng rng(110);
    for (int i = 0; i < 300; ++i) {
        const AxisAngleRotation r1(rng.unit_vector(), rng.uniform(0.0, kPi));
        const AxisAngleRotation r2(rng.unit_vector(), rng.uniform(0.0, kPi));
        const AxisAngleRotation r3(rng.unit_vector(), rng.uniform(0.0, kPi));
        const double five = composite_cos_half_angle(r1, r2, r3);
        const double brute = compose_three(r1, r2, r3).w();
        CHECK(std::abs(five - brute) < 1e-12);
        // cyclic invariance
        CHECK(std::abs(composite_cos_half_angle(r3, r1, r2) - five) < 1e-12);
        CHECK(std::abs(composite_cos_half_angle(r2, r3, r1) - five) < 1e-12);
    }
}
