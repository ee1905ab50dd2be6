#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "wigkit/random.hpp"
#include "wigkit/spherical.hpp"
#include "wigkit/sweep.hpp"
#include "wigkit/wigner.hpp"

using namespace wigkit;

namespace {

constexpr double kPi = 3.14159265358979323846;

double min_vertex_distance(const UnitVec3& v, const SphericalTriangle& t) {
    return std::min({(v.vec() - t.v1().vec()).norm(), (v.vec() - t.v2().vec()).norm(),
                     (v.vec() - t.v3().vec()).norm()});
}

SphericalTriangle random_positive_triangle(Rng& rng) {
    while (true) {
        const UnitVec3 a = rng.unit_vector(), b = rng.unit_vector(), c = rng.unit_vector();
        try {
            SphericalTriangle t(a, b, c);
            if (std::abs(t.orientation()) < 1e-3) continue; // keep well-conditioned
            if (t.orientation() > 0.0) return t;
            return SphericalTriangle(a, c, b);
        } catch (const DegenerateTriangle&) {
        }
    }
}

} // namespace

TEST_CASE("SphericalTriangle validates its vertices") {
    CHECK_NOTHROW(SphericalTriangle(UnitVec3::xhat(), UnitVec3::yhat(), UnitVec3::zhat()));
    CHECK_THROWS_AS(SphericalTriangle(UnitVec3::xhat(), UnitVec3::xhat(), UnitVec3::zhat()),
                    DegenerateTriangle);
    CHECK_THROWS_AS(SphericalTriangle(UnitVec3::xhat(), UnitVec3(-1, 0, 0), UnitVec3::zhat()),
                    DegenerateTriangle);
    // coplanar through the center
    CHECK_THROWS_AS(SphericalTriangle(UnitVec3::xhat(), UnitVec3::yhat(), UnitVec3(1, 1, 0)),
                    DegenerateTriangle);
}

TEST_CASE("polar triangle of the octant is its cyclic shift") {
    const SphericalTriangle oct(UnitVec3::xhat(), UnitVec3::yhat(), UnitVec3::zhat());
    const SphericalTriangle pol = polar_triangle(oct);
    CHECK((pol.v1().vec() - Vec3{0, 0, 1}).norm() < 1e-15);
    CHECK((pol.v2().vec() - Vec3{1, 0, 0}).norm() < 1e-15);
    CHECK((pol.v3().vec() - Vec3{0, 1, 0}).norm() < 1e-15);
}

TEST_CASE("double polar recovers the vertex set of positive triangles") {
    Rng rng(401);
    for (int i = 0; i < 200; ++i) {
        const SphericalTriangle t = random_positive_triangle(rng);
        const SphericalTriangle back = polar_triangle(polar_triangle(t));
        CHECK(min_vertex_distance(t.v1(), back) < 1e-10);
        CHECK(min_vertex_distance(t.v2(), back) < 1e-10);
        CHECK(min_vertex_distance(t.v3(), back) < 1e-10);
    }
}

TEST_CASE("excess_from_axes on the octant axes") {
    const SphericalTriangle oct(UnitVec3::xhat(), UnitVec3::yhat(), UnitVec3::zhat());
    const SphericalTriangle pol = polar_triangle(oct);
    CHECK(excess_from_axes(pol.v1(), pol.v2(), pol.v3()) ==
          doctest::Approx(0.5 * kPi).epsilon(1e-14));
}

TEST_CASE("tiny triangles have vanishing excess") {
    const double eps = 1e-4;
    const UnitVec3 a = UnitVec3::zhat();
    const UnitVec3 b(eps, 0.0, 1.0);
    const UnitVec3 c(0.0, eps, 1.0);
    const SphericalTriangle t(a, b, c);
    const double excess = excess_from_angle_sum(t);
    CHECK(excess > 0.0);
    CHECK(excess < 1e-6);
    const SphericalTriangle pol = polar_triangle(t);
    CHECK(excess_from_axes(pol.v1(), pol.v2(), pol.v3()) == doctest::Approx(excess).epsilon(1e-8));
}

TEST_CASE("shrinking a triangle makes the excess behave like the area") {
    // scale the octant down by 1e-3 about the z vertex
    const double s = 1e-3;
    const UnitVec3 a = UnitVec3::zhat();
    const UnitVec3 b(std::sin(s), 0.0, std::cos(s));
    const UnitVec3 c(0.0, std::sin(s), std::cos(s));
    const double excess = excess_from_angle_sum(SphericalTriangle(a, b, c));
    CHECK(excess > 0.0);
    CHECK(excess < 1e-5);
    CHECK(excess == doctest::Approx(0.5 * s * s).epsilon(1e-3)); // flat right triangle area
}

TEST_CASE("angle-sum excess agrees with the polar-axes route") {
    Rng rng(402);
    for (int i = 0; i < 1000; ++i) {
        const SphericalTriangle t = random_positive_triangle(rng);
        const SphericalTriangle pol = polar_triangle(t);
        const double e_sum = excess_from_angle_sum(t);
        const double e_axes = excess_from_axes(pol.v1(), pol.v2(), pol.v3());
        CHECK(std::abs(e_sum - e_axes) < 1e-10);
        CHECK(e_sum > 0.0);
    }
}

TEST_CASE("lhuilier_excess fixed cases and validation") {
    SUBCASE("octant: three right sides give a right-angle excess") {
        CHECK(lhuilier_excess(0.5 * kPi, 0.5 * kPi, 0.5 * kPi) ==
              doctest::Approx(0.5 * kPi).epsilon(1e-14));
    }
    SUBCASE("equilateral triangles match the constructed angle sum") {
        for (double side : {0.3, 0.9, 1.5}) {
            // vertices at equal colatitude r, azimuths 0, 2pi/3, 4pi/3; the law
            // of cosines cos(side) = cos^2(r) + sin^2(r) cos(2pi/3) gives
            // cos^2(r) = (2 cos(side) + 1) / 3
            const double r = std::acos(std::sqrt((2.0 * std::cos(side) + 1.0) / 3.0));
            const auto vertex = [&](double az) {
                return UnitVec3(std::sin(r) * std::cos(az), std::sin(r) * std::sin(az), std::cos(r));
            };
            const SphericalTriangle t(vertex(0.0), vertex(2.0 * kPi / 3.0), vertex(4.0 * kPi / 3.0));
            CHECK(angle_between(t.v1(), t.v2()) == doctest::Approx(side).epsilon(1e-12));
            CHECK(lhuilier_excess(side, side, side) ==
                  doctest::Approx(excess_from_angle_sum(t)).epsilon(1e-10));
        }
    }
    SUBCASE("invalid side sets are rejected") {
        CHECK_THROWS_AS(lhuilier_excess(0.0, 1.0, 1.0), InvalidSides);
        CHECK_THROWS_AS(lhuilier_excess(1.0, 1.0, 2.5), InvalidSides); // violates a+b > c
        CHECK_THROWS_AS(lhuilier_excess(3.0, 3.0, 0.5), InvalidSides); // perimeter >= 2pi
        CHECK_THROWS_AS(lhuilier_excess(kPi, 1.0, 1.0), InvalidSides);
    }
}

TEST_CASE("the three excess routes agree on random triangles") {
    Rng rng(403);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SphericalTriangle t = random_positive_triangle(rng);
        const SphericalTriangle pol = polar_triangle(t);
        const double e_sum = excess_from_angle_sum(t);
        const double e_axes = excess_from_axes(pol.v1(), pol.v2(), pol.v3());
        const double e_lh = lhuilier_excess(angle_between(t.v1(), t.v2()),
                                            angle_between(t.v2(), t.v3()),
                                            angle_between(t.v3(), t.v1()));
        worst = std::max({worst, std::abs(e_sum - e_axes), std::abs(e_sum - e_lh)});
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("supplement relation between a triangle and its polar vertices") {
    Rng rng(404);
    for (int i = 0; i < 300; ++i) {
        const SphericalTriangle t = random_positive_triangle(rng);
        const SphericalTriangle pol = polar_triangle(t);
        // interior angle at v2 (between arcs to v1 and v3) is the supplement of
        // the angle between the adjacent polar vertices n1 ~ v1 x v2, n2 ~ v2 x v3
        const Vec3 ta = t.v1().vec() - t.v2().vec() * t.v2().dot(t.v1());
        const Vec3 tb = t.v3().vec() - t.v2().vec() * t.v2().dot(t.v3());
        const double interior = std::acos(std::clamp(UnitVec3(ta).dot(UnitVec3(tb)), -1.0, 1.0));
        const double supplement = kPi - angle_between(pol.v1(), pol.v2());
        CHECK(std::abs(interior - supplement) < 1e-10);
    }
}

TEST_CASE("perpendicular-family Wigner angle equals the triangle excess") {
    Rng rng(405);
    double worst = 0.0;
    int done = 0;
    while (done < 300) {
        EvalParams params;
        params.p_hat = rng.unit_vector();
        if (std::abs(params.p_hat.z()) >= 1.0 - 1e-3) continue;
        params.b_hat = rng.unit_vector();
        params.v_b = rng.uniform(1e-3, 0.99);
        params.theta = 0.5 * kPi;
        params.ratio = std::exp((rng.uniform() < 0.5 ? -1.0 : 1.0) *
                                std::atanh(rng.uniform(0.01, 0.99)));
        try {
            const EvalResult r = evaluate(params);
            if (!r.excess) continue;
            const SphericalTriangle t(UnitVec3::zhat(), params.p_hat, r.aberrated);
            const SphericalTriangle pol = polar_triangle(t);
            for (double e : {*r.excess, excess_from_axes(pol.v1(), pol.v2(), pol.v3()),
                             lhuilier_excess(angle_between(t.v1(), t.v2()),
                                             angle_between(t.v2(), t.v3()),
                                             angle_between(t.v3(), t.v1()))}) {
                const double wrapped = std::abs(std::remainder(e, 2.0 * kPi));
                worst = std::max(worst, std::abs(wrapped - std::abs(r.phi_w)));
            }
            // orientation convention: the sign of phi_w follows z.(p x Lp)
            const double orient = UnitVec3::zhat().dot(t.v2().cross(t.v3()));
            const double signed_excess = std::remainder(orient > 0 ? *r.excess : -*r.excess,
                                                        2.0 * kPi);
            worst = std::max(worst, std::abs(signed_excess - r.phi_w));
            ++done;
        } catch (const AntipodalDirection&) {
        } catch (const DegenerateTriangle&) {
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("wigner rotation axes are the polar vertices of the momentum triangle") {
    EvalParams params; // reference defaults: tilted momentum, diagonal boost, theta = pi/2
    const EvalResult r = evaluate(params);
    const SphericalTriangle t(UnitVec3::zhat(), params.p_hat, r.aberrated);
    const SphericalTriangle pol = polar_triangle(t);
    CHECK((pol.v1().vec() - r.n1.axis().vec()).norm() < 1e-9);
    CHECK((pol.v2().vec() - r.n2.axis().vec()).norm() < 1e-9);
    // n3 carries the inverse rotation; canonicalization flips its axis onto v3
    CHECK((pol.v3().vec() - r.n3.axis().vec()).norm() < 1e-9);
}
