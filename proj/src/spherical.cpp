#include "wigkit/spherical.hpp"

#include <algorithm>
#include <cmath>

namespace wigkit {

namespace {
constexpr double kPi = 3.14159265358979323846;

double interior_angle(const UnitVec3& at, const UnitVec3& a, const UnitVec3& b) {
    // angle between the tangents of the arcs at->a and at->b
    const Vec3 ta = a.vec() - at.vec() * at.dot(a);
    const Vec3 tb = b.vec() - at.vec() * at.dot(b);
    return std::acos(std::clamp(UnitVec3(ta).dot(UnitVec3(tb)), -1.0, 1.0));
}
} // namespace

SphericalTriangle::SphericalTriangle(const UnitVec3& v1, const UnitVec3& v2, const UnitVec3& v3)
    : v1_(v1), v2_(v2), v3_(v3) {
    if (std::abs(v1_.dot(v2_)) >= 1.0 - 1e-10 || std::abs(v2_.dot(v3_)) >= 1.0 - 1e-10 ||
        std::abs(v3_.dot(v1_)) >= 1.0 - 1e-10) {
        throw DegenerateTriangle("SphericalTriangle: two vertices are (anti)parallel");
    }
    if (std::abs(orientation()) <= 1e-12) {
        throw DegenerateTriangle("SphericalTriangle: vertices are coplanar with the center");
    }
}

double SphericalTriangle::orientation() const {
    return v1_.dot(v2_.cross(v3_));
}

SphericalTriangle polar_triangle(const SphericalTriangle& t) {
    return SphericalTriangle(UnitVec3(t.v1().cross(t.v2())),
                             UnitVec3(t.v2().cross(t.v3())),
                             UnitVec3(t.v3().cross(t.v1())));
}

double excess_from_axes(const UnitVec3& n1, const UnitVec3& n2, const UnitVec3& n3) {
    const double d12 = n1.dot(n2), d23 = n2.dot(n3), d13 = n1.dot(n3);
    if (std::abs(d12) > 1.0 - 1e-12 || std::abs(d23) > 1.0 - 1e-12 || std::abs(d13) > 1.0 - 1e-12) {
        throw DegenerateTriangle("excess_from_axes: axes are (anti)parallel");
    }
    const double sum = (kPi - std::acos(std::clamp(d12, -1.0, 1.0)))
                     + (kPi - std::acos(std::clamp(d23, -1.0, 1.0)))
                     + (kPi - std::acos(std::clamp(d13, -1.0, 1.0)));
    return sum - kPi;
}

double excess_from_angle_sum(const SphericalTriangle& t) {
    return interior_angle(t.v1(), t.v2(), t.v3())
         + interior_angle(t.v2(), t.v3(), t.v1())
         + interior_angle(t.v3(), t.v1(), t.v2())
         - kPi;
}

double lhuilier_excess(double a, double b, double c) {
    for (double side : {a, b, c}) {
        if (!(side > 0.0 && side < kPi)) {
            throw InvalidSides("lhuilier_excess: sides must lie in (0, pi)");
        }
    }
    if (a + b <= c || b + c <= a || c + a <= b || a + b + c >= 2.0 * kPi) {
        throw InvalidSides("lhuilier_excess: triangle inequalities violated");
    }
    const double s = 0.5 * (a + b + c);
    double prod = std::tan(0.5 * s) * std::tan(0.5 * (s - a)) * std::tan(0.5 * (s - b)) *
                  std::tan(0.5 * (s - c));
    if (prod < -1e-12) {
        throw InvalidSides("lhuilier_excess: negative tangent product");
    }
    prod = std::max(prod, 0.0);
    return 4.0 * std::atan(std::sqrt(prod));
}

} // namespace wigkit
