#pragma once

#include <algorithm>
#include <cmath>

#include "wigkit/errors.hpp"

namespace wigkit {

namespace tol {
// Type invariants are enforced to kConstruction; agreement between
// independent computational routes is asserted to kCrossFormula.
inline constexpr double kConstruction = 1e-12;
inline constexpr double kCrossFormula = 1e-10;
inline constexpr double kMatrix = 1e-9;
} // namespace tol

/** Plain 3-vector with the usual arithmetic. */
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/**
A normalized spatial direction. Construction renormalizes its argument and
rejects the zero vector; components are read-only thereafter.
*/
class UnitVec3 {
public:
    explicit UnitVec3(const Vec3& v) {
        const double n = v.norm();
        if (!(n > tol::kConstruction)) {
            throw DegenerateDirections("UnitVec3: cannot normalize a (near-)zero vector");
        }
        v_ = v / n;
    }
    UnitVec3(double x, double y, double z) : UnitVec3(Vec3{x, y, z}) {}

    static UnitVec3 xhat() { return UnitVec3(1, 0, 0); }
    static UnitVec3 yhat() { return UnitVec3(0, 1, 0); }
    static UnitVec3 zhat() { return UnitVec3(0, 0, 1); }

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    const Vec3& vec() const { return v_; }

    double dot(const UnitVec3& o) const { return v_.dot(o.v_); }
    double dot(const Vec3& o) const { return v_.dot(o); }
    Vec3 cross(const UnitVec3& o) const { return v_.cross(o.v_); }
    UnitVec3 negated() const { return UnitVec3(-v_); }

    /** Polar angle from +z, in [0, pi]. */
    double polar_angle() const { return std::acos(std::clamp(v_.z, -1.0, 1.0)); }
    /** Azimuthal angle about +z measured from +x, in (-pi, pi]. */
    double azimuth_angle() const { return std::atan2(v_.y, v_.x); }

private:
    Vec3 v_;
};

/** Arc length between two directions, arccos of the clamped dot product. */
inline double angle_between(const UnitVec3& a, const UnitVec3& b) {
    return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

} // namespace wigkit
