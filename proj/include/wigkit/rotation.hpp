#pragma once

#include <array>

#include "wigkit/vec3.hpp"

namespace wigkit {

/** Row-major 3x3 matrix, just enough for rotation work. */
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 I;
        I.m[0][0] = I.m[1][1] = I.m[2][2] = 1.0;
        return I;
    }
    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
};

/**
A rotation stored as (axis, angle) with the angle canonicalized into [0, pi];
angles outside that range are reduced modulo 2*pi and, when negative, the axis
is flipped. Signed angles about a declared reference axis are a reporting
convention layered on top (see signed_angle_about below), never stored here.
*/
class AxisAngleRotation {
public:
    AxisAngleRotation(const UnitVec3& axis, double angle) : axis_(axis), angle_(angle) {
        canonicalize();
    }

    static AxisAngleRotation identity() { return AxisAngleRotation(UnitVec3::zhat(), 0.0); }

    const UnitVec3& axis() const { return axis_; }
    double angle() const { return angle_; }

    AxisAngleRotation inverse() const { return AxisAngleRotation(axis_, -angle_); }

private:
    void canonicalize();

    UnitVec3 axis_;
    double angle_;
};

/**
Unit quaternion w + v, the SU(2) double cover of the rotations. Construction
renormalizes; conversion back to axis-angle resolves the double cover by
negating all four components when w < 0.
*/
class UnitQuaternion {
public:
    UnitQuaternion(double w, const Vec3& v);

    static UnitQuaternion identity() { return UnitQuaternion(1.0, Vec3{}); }

    double w() const { return w_; }
    const Vec3& v() const { return v_; }

    AxisAngleRotation to_axis_angle() const;

private:
    double w_;
    Vec3 v_;
};

/** Orthonormal triple spanning the solutions of the two-direction rotation problem. */
struct RotationFamilyBasis {
    UnitVec3 u1; // normal to the k-kprime plane, along k x kprime
    UnitVec3 u2; // bisector, along k + kprime
    UnitVec3 u3; // along kprime - k
};

/** Rotate k by rot: k cos(a) + (n x k) sin(a) + n (n.k)(1 - cos(a)), renormalized. */
UnitVec3 rodrigues_rotate(const UnitVec3& k, const AxisAngleRotation& rot);

/** The 3x3 matrix of rot, same formula in matrix form. */
Mat3 rotation_matrix(const AxisAngleRotation& rot);

/**
Basis of Eq.-style solutions for rotations carrying k to kprime. Requires the
directions to be neither parallel nor antiparallel (|k.kprime| < 1 - 1e-10).
*/
RotationFamilyBasis rotation_family_basis(const UnitVec3& k, const UnitVec3& kprime);

/**
Member of the one-parameter family of rotations mapping k onto kprime. The
axis is u2 cos(theta) + u1 sin(theta) and the angle solves
sin(theta) = tan(phi_kk'/2) / tan(phi/2), computed as
phi = 2 atan2(tan(phi_kk'/2), sin(theta)) which is finite for every theta; at
sin(theta) = 0 this is exactly the half-turn about the bisector line, which
also maps k to kprime. Guarantees rodrigues_rotate(k, result) == kprime to
1e-10.
*/
AxisAngleRotation axis_from_theta(const UnitVec3& k, const UnitVec3& kprime, double theta);

/** q = cos(phi/2) + n sin(phi/2). */
UnitQuaternion quat_from_axis_angle(const AxisAngleRotation& rot);

/** Hamilton product q2 * q1 (q1 acts first), renormalized. */
UnitQuaternion quat_product(const UnitQuaternion& q2, const UnitQuaternion& q1);

/**
cos(phi_c/2) of the composite of three rotations r3 * r2 * r1 by the five-term
half-angle expansion:

  c1 c2 c3 - s1 s2 c3 (n1.n2) - s2 s3 c1 (n2.n3) - s3 s1 c2 (n3.n1)
           - s1 s2 s3 n3.(n2 x n1)

with ci = cos(phi_i/2), si = sin(phi_i/2). Invariant under cyclic permutation
of the arguments.
*/
double composite_cos_half_angle(const AxisAngleRotation& r1, const AxisAngleRotation& r2,
                                const AxisAngleRotation& r3);

/**
Signed rotation angle of the composite r3 * r2 * r1. The scalar part of the
full quaternion product must agree with composite_cos_half_angle to 1e-12 (an
algebraic identity; violation throws std::logic_error). The returned value is
the rotation angle in [0, pi] signed by the z-component of the composite axis,
the convention used for reporting angles about +z.
*/
double wigner_angle_closed_form(const AxisAngleRotation& r1, const AxisAngleRotation& r2,
                                const AxisAngleRotation& r3);

/** Full composite quaternion q3 * q2 * q1 of three rotations. */
UnitQuaternion compose_three(const AxisAngleRotation& r1, const AxisAngleRotation& r2,
                             const AxisAngleRotation& r3);

/** Angle of rot signed by sign(axis . reference), for reporting about a declared axis. */
double signed_angle_about(const AxisAngleRotation& rot, const UnitVec3& reference);

} // namespace wigkit
