#include "wigkit/rotation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wigkit {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
} // namespace

void AxisAngleRotation::canonicalize() {
    double a = std::remainder(angle_, kTwoPi); // (-pi, pi]
    if (a < 0.0) {
        a = -a;
        axis_ = axis_.negated();
    }
    angle_ = a;
}

UnitQuaternion::UnitQuaternion(double w, const Vec3& v) : w_(w), v_(v) {
    const double n = std::sqrt(w_ * w_ + v_.dot(v_));
    if (!(n > tol::kConstruction)) {
        throw std::invalid_argument("UnitQuaternion: cannot normalize a (near-)zero quaternion");
    }
    w_ /= n;
    v_ = v_ / n;
}

AxisAngleRotation UnitQuaternion::to_axis_angle() const {
    double w = w_;
    Vec3 v = v_;
    if (w < 0.0) { // double-cover resolution
        w = -w;
        v = -v;
    }
    const double s = v.norm();
    if (s <= tol::kConstruction) {
        return AxisAngleRotation::identity();
    }
    return AxisAngleRotation(UnitVec3(v), 2.0 * std::atan2(s, w));
}

UnitVec3 rodrigues_rotate(const UnitVec3& k, const AxisAngleRotation& rot) {
    const Vec3 n = rot.axis().vec();
    const Vec3 kv = k.vec();
    const double c = std::cos(rot.angle());
    const double s = std::sin(rot.angle());
    const Vec3 r = kv * c + n.cross(kv) * s + n * (n.dot(kv) * (1.0 - c));
    return UnitVec3(r);
}

Mat3 rotation_matrix(const AxisAngleRotation& rot) {
    const Vec3 n = rot.axis().vec();
    const double c = std::cos(rot.angle());
    const double s = std::sin(rot.angle());
    const double v = 1.0 - c;
    Mat3 R;
    R.m[0][0] = n.x * n.x * v + c;
    R.m[0][1] = n.x * n.y * v - n.z * s;
    R.m[0][2] = n.x * n.z * v + n.y * s;
    R.m[1][0] = n.y * n.x * v + n.z * s;
    R.m[1][1] = n.y * n.y * v + c;
    R.m[1][2] = n.y * n.z * v - n.x * s;
    R.m[2][0] = n.z * n.x * v - n.y * s;
    R.m[2][1] = n.z * n.y * v + n.x * s;
    R.m[2][2] = n.z * n.z * v + c;
    return R;
}

RotationFamilyBasis rotation_family_basis(const UnitVec3& k, const UnitVec3& kprime) {
    const double c = k.dot(kprime);
    if (std::abs(c) >= 1.0 - 1e-10) {
        throw DegenerateDirections("rotation_family_basis: directions are (anti)parallel");
    }
    return RotationFamilyBasis{
        UnitVec3(k.cross(kprime)),
        UnitVec3(k.vec() + kprime.vec()),
        UnitVec3(kprime.vec() - k.vec()),
    };
}

AxisAngleRotation axis_from_theta(const UnitVec3& k, const UnitVec3& kprime, double theta) {
    const RotationFamilyBasis basis = rotation_family_basis(k, kprime);
    const double phi_kk = angle_between(k, kprime);
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const Vec3 axis = basis.u2.vec() * ct + basis.u1.vec() * st;
    // 2 atan2(tan(phi/2), sin(theta)) stays finite for all theta; at
    // sin(theta) == 0 it is exactly pi, the half-turn about the bisector line.
    const double angle = 2.0 * std::atan2(std::tan(0.5 * phi_kk), st);
    return AxisAngleRotation(UnitVec3(axis), angle);
}

UnitQuaternion quat_from_axis_angle(const AxisAngleRotation& rot) {
    const double h = 0.5 * rot.angle();
    return UnitQuaternion(std::cos(h), rot.axis().vec() * std::sin(h));
}

UnitQuaternion quat_product(const UnitQuaternion& q2, const UnitQuaternion& q1) {
    const double w = q2.w() * q1.w() - q2.v().dot(q1.v());
    const Vec3 v = q1.v() * q2.w() + q2.v() * q1.w() + q2.v().cross(q1.v());
    return UnitQuaternion(w, v);
}

double composite_cos_half_angle(const AxisAngleRotation& r1, const AxisAngleRotation& r2,
                                const AxisAngleRotation& r3) {
    const Vec3 n1 = r1.axis().vec(), n2 = r2.axis().vec(), n3 = r3.axis().vec();
    const double c1 = std::cos(0.5 * r1.angle()), s1 = std::sin(0.5 * r1.angle());
    const double c2 = std::cos(0.5 * r2.angle()), s2 = std::sin(0.5 * r2.angle());
    const double c3 = std::cos(0.5 * r3.angle()), s3 = std::sin(0.5 * r3.angle());
    return c1 * c2 * c3
        - s1 * s2 * c3 * n1.dot(n2)
        - s2 * s3 * c1 * n2.dot(n3)
        - s3 * s1 * c2 * n3.dot(n1)
        - s1 * s2 * s3 * n3.dot(n2.cross(n1));
}

UnitQuaternion compose_three(const AxisAngleRotation& r1, const AxisAngleRotation& r2,
                             const AxisAngleRotation& r3) {
    return quat_product(quat_from_axis_angle(r3),
                        quat_product(quat_from_axis_angle(r2), quat_from_axis_angle(r1)));
}

double signed_angle_about(const AxisAngleRotation& rot, const UnitVec3& reference) {
    const double a = rot.axis().dot(reference) < 0.0 ? -rot.angle() : rot.angle();
    return a == -kPi ? kPi : a; // keep the reported range (-pi, pi]
}

double wigner_angle_closed_form(const AxisAngleRotation& r1, const AxisAngleRotation& r2,
                                const AxisAngleRotation& r3) {
    const UnitQuaternion q = compose_three(r1, r2, r3);
    const double expansion = composite_cos_half_angle(r1, r2, r3);
    if (std::abs(q.w() - expansion) > 1e-12) {
        throw std::logic_error("wigner_angle_closed_form: half-angle expansion disagrees with "
                               "the quaternion product by " + std::to_string(q.w() - expansion));
    }
    return signed_angle_about(q.to_axis_angle(), UnitVec3::zhat());
}

} // namespace wigkit
