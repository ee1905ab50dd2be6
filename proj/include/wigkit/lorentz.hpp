#pragma once

#include <array>

#include "wigkit/rotation.hpp"
#include "wigkit/vec3.hpp"

namespace wigkit {

/** Exact speed of light used for unit conversion of km/s inputs. */
inline constexpr double kLightSpeedKmPerS = 299792.458;

/**
Lightlike four-momentum (e, px, py, pz) in units of the reference frequency,
with c = 1. Construction enforces e > 0 and the mass-shell constraint
|e^2 - |p|^2| <= 1e-9 e^2 (relative, so large frequency ratios survive).
*/
class FourMomentum {
public:
    FourMomentum(double e, double px, double py, double pz);

    /** p0 (1, phat). */
    static FourMomentum from_direction(double e, const UnitVec3& phat) {
        return FourMomentum(e, e * phat.x(), e * phat.y(), e * phat.z());
    }
    /** The standard momentum omega0 (1, 0, 0, 1) along +z. */
    static FourMomentum standard(double omega0) { return FourMomentum(omega0, 0.0, 0.0, omega0); }

    double e() const { return e_; }
    double px() const { return p_.x; }
    double py() const { return p_.y; }
    double pz() const { return p_.z; }
    const Vec3& spatial() const { return p_; }
    UnitVec3 direction() const { return UnitVec3(p_); }

private:
    double e_;
    Vec3 p_;
};

/** A pure boost: direction and dimensionless speed beta in [0, 1). */
class Boost {
public:
    Boost(const UnitVec3& direction, double beta);

    const UnitVec3& direction() const { return dir_; }
    double beta() const { return beta_; }
    double gamma() const;

private:
    UnitVec3 dir_;
    double beta_;
};

struct PolarDecomposition;

/**
A 4x4 proper orthochronous Lorentz matrix, row-major, index order (t, x, y, z).
Direct construction from raw entries validates metric preservation
(M^T eta M = eta within 1e-10), m[0][0] >= 1 and det = +1; products of
already-validated matrices are composed without revalidation (closure is
checked by the property tests at 1e-9).
*/
class LorentzMatrix {
public:
    using Raw = std::array<std::array<double, 4>, 4>;

    static LorentzMatrix identity();
    /** Validating entry point for externally supplied entries. */
    static LorentzMatrix from_array(const Raw& raw);

    double operator()(int i, int j) const { return m_[i][j]; }
    const Raw& raw() const { return m_; }

    LorentzMatrix operator*(const LorentzMatrix& o) const;
    /** Exact inverse eta M^T eta of a metric-preserving matrix. */
    LorentzMatrix inverse() const;

    /** Largest |M^T eta M - eta| entry. */
    double metric_residual() const;
    double det() const;

private:
    LorentzMatrix() = default;
    Raw m_{};

    // Construction sites whose entries are exact by construction; revalidating
    // them would false-positive on large rapidities where the check's own
    // floating-point error exceeds the bound.
    friend LorentzMatrix boost_matrix(const Boost& b);
    friend LorentzMatrix standard_massless_boost(double ratio);
    friend LorentzMatrix embed_rotation(const AxisAngleRotation& rot);
    friend PolarDecomposition polar_decompose(const LorentzMatrix& M);
};

/** Pure-boost matrix of b. */
LorentzMatrix boost_matrix(const Boost& b);

/**
Boost along +z carrying the standard momentum (1,0,0,1) to ratio*(1,0,0,1);
rapidity ln(ratio). Throws NonPositiveRatio for ratio <= 0.
*/
LorentzMatrix standard_massless_boost(double ratio);

/** Spatial 3x3 rotation block embedded with a trivial time row/column. */
LorentzMatrix embed_rotation(const AxisAngleRotation& rot);

/** Matrix-vector product; throws NotLightlike if the image leaves the mass shell. */
FourMomentum apply(const LorentzMatrix& M, const FourMomentum& p);

/** Normalized spatial part of apply(M, p). */
UnitVec3 aberrated_direction(const LorentzMatrix& M, const FourMomentum& p);

struct PolarDecomposition {
    LorentzMatrix boost_part;      // symmetric positive-definite pure boost
    AxisAngleRotation rotation_part;
};

/**
Unique factorization M = B * R with B the symmetric square root of M M^T
(cyclic Jacobi eigendecomposition, deterministic sweep order) and R = B^-1 M
an embedded rotation. Reconstruction is enforced to ||B R - M||_inf <= 1e-10.
Throws DecompositionFailure if an eigenvalue is non-positive.
*/
PolarDecomposition polar_decompose(const LorentzMatrix& M);

/** Rotation axis of the two-boost composition, (p x b)/||p x b||. */
UnitVec3 thomas_axis(const UnitVec3& p, const UnitVec3& b);

/**
Rotation angle of the two-boost composition B_b(vb) . B_p(vz), in [0, pi]:

  cos(phi2) = 1 - (gamma_b - 1)(gamma_z - 1)(1 - cos_bp^2)
                  / (gamma_b gamma_z (1 + vb vz cos_bp) + 1)

The denominator is gamma_composite + 1 with gamma_composite the Lorentz factor
of the composed velocities; equivalently this is the trace identity
cos(phi2) = (1 + gamma_b + gamma_z + gamma_c)^2 /
            ((1+gamma_b)(1+gamma_z)(1+gamma_c)) - 1.
Cross-validated against polar_decompose of the explicit matrix product.
*/
double thomas_angle(double vb, double vz, double cos_bp);

} // namespace wigkit
