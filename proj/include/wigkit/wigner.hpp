#pragma once

#include <array>
#include <complex>
#include <string>

#include "wigkit/lorentz.hpp"

namespace wigkit {

/**
Choice of standard transformation: the family parameter theta selecting which
rotation carries +z onto the momentum direction, and the reference frequency.
The same theta is applied to both the incoming and the transformed momentum;
theta is wrapped into [0, 2*pi).
*/
class StandardTransformChoice {
public:
    explicit StandardTransformChoice(double theta, double omega0 = 1.0);

    double theta() const { return theta_; }
    double omega0() const { return omega0_; }

private:
    double theta_;
    double omega0_;
};

/**
ISO(2) parts of a Lorentz matrix stabilizing the standard lightlike momentum:
W = S(alpha, beta) * R_z(angle), where S is the null translation and R_z the
rotation about +z. The (x, y) block of W equals R_z(angle)'s exactly, so the
rotation angle is read off as atan2(W_yx, W_xx); alpha = W_xt, beta = W_yt.
The null parts scale inversely with the momentum's frequency and act trivially
on helicity phases; the angle is the physical one.
*/
struct LittleGroupParts {
    double angle;  // rotation about +z, in (-pi, pi]
    double alpha;  // null-translation components
    double beta;
    double reconstruction_residual; // ||S(alpha,beta) R_z(angle) - W||_inf
};

LittleGroupParts little_group_parts(const LorentzMatrix& W);

/** Rotation angle about +z of a little-group element (the helicity phase angle). */
double little_group_angle(const LorentzMatrix& W);

/**
Result of the analytic Wigner construction: the generated little-group
rotation (an exact embedded rotation about +z), its signed angle, the three
composing rotations, and the angle independently extracted from the
matrix-composition route.
*/
struct WignerResult {
    LorentzMatrix matrix;    // embedded composite rotation, fixes the standard momentum
    UnitVec3 axis;           // reported as +z; the sign lives in angle_signed
    double angle_signed;     // about +z, in (-pi, pi]
    std::array<AxisAngleRotation, 3> rotations; // (n1,phi1), (n2,phi2), (n3,phi3)
    double oracle_angle;     // extraction from the matrix-composition oracle
    FourMomentum transformed_momentum; // Lambda p
    double residual() const; // |angle_signed - oracle_angle|, wrap-aware
};

/**
Photon helicity content attached to a momentum: amplitudes for sigma = +1 and
sigma = -1, normalized to |a+|^2 + |a-|^2 = 1 within 1e-12.
*/
class HelicityState {
public:
    HelicityState(std::complex<double> amp_plus, std::complex<double> amp_minus,
                  const FourMomentum& p);

    /** A pure helicity eigenstate, sigma = +1 or -1. */
    static HelicityState pure(int sigma, const FourMomentum& p);

    std::complex<double> amp_plus() const { return ap_; }
    std::complex<double> amp_minus() const { return am_; }
    const FourMomentum& momentum() const { return p_; }

private:
    std::complex<double> ap_, am_;
    FourMomentum p_;
};

/**
Phase bookkeeping of a little-group action on a helicity state. The per-sigma
factors exp(+i phi_W) and exp(-i phi_W) are recorded; the frequency-dependent
normalization factor is not a number this library defines, so it is carried as
an opaque symbol and excluded from all arithmetic.
*/
struct HelicityPhaseRecord {
    HelicityState state;                 // transformed state, momentum updated
    std::complex<double> phase_plus;     // exp(+i phi_W)
    std::complex<double> phase_minus;    // exp(-i phi_W)
    double relative_phase;               // 2 phi_W between the two components
    std::string normalization_symbol;    // "N(p0, Lambda)", symbolic only
};

/**
Standard transformation L(p): the family rotation carrying +z to the momentum
direction (selected by choice.theta) composed after the +z boost with ratio
p0/omega0. Satisfies apply(L, k) == p to 1e-10 relative. Throws
AntipodalDirection when the direction is within 1e-10 of -z, where the family
is singular; a direction aligned with +z uses the identity rotation.
*/
LorentzMatrix standard_transformation(const FourMomentum& p, const StandardTransformChoice& choice);

/**
Little-group element by direct matrix composition,
W = L(Lambda p)^-1 * Lambda * L(p), with the same theta on both sides. The
result stabilizes the standard momentum k = omega0 (1,0,0,1) to machine
precision. Note W generically carries a null-translation component on top of
its rotation part (see LittleGroupParts); little_group_angle extracts the
physical angle.
*/
LorentzMatrix wigner_matrix_oracle(const LorentzMatrix& Lambda, const FourMomentum& p,
                                   const StandardTransformChoice& choice);

/**
Analytic route: the little-group rotation as the composite of three rotations

  (n1, phi1): family rotation +z -> p-hat at the chosen theta,
  (n2, phi2): the in-plane transport carrying p-hat onto the aberrated
              direction (axis along p-hat x Lambda-p-hat, angle equal to the
              aberration angle) -- the unique rotation that closes the
              spherical path, with the same axis as thomas_axis(p-hat, b-hat),
  (n3, phi3): inverse family rotation +z -> Lambda-p-hat at the same theta,

composed by quaternions with the half-angle expansion cross-check. The
composite fixes +z exactly; its signed angle is checked against the matrix
oracle to 1e-9 (std::logic_error on disagreement). Restricted to pure boosts.
*/
WignerResult wigner_angle_analytic(const Boost& lambda_b, const FourMomentum& p,
                                   const StandardTransformChoice& choice);

/**
Third rotation angle from the first via the conserved family parameter:
tan(phi1/2)/tan(phi3/2) = tan(angle_zp/2)/tan(angle_zLp/2). Arguments in
(0, pi); throws DegenerateTheta when a tangent vanishes.
*/
double phi3_from_phi1(double phi1, double angle_zp, double angle_zLp);

/**
Apply the little-group phase to a helicity state: each sigma component picks
up exp(i sigma phi_W) and the momentum is replaced by the transformed one. For
superpositions this is a relative phase 2 phi_W between the components.
*/
HelicityPhaseRecord apply_helicity_phase(const HelicityState& state, const WignerResult& w);

} // namespace wigkit
