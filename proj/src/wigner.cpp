#include "wigkit/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wigkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kAntipodalCap = 1e-10;

double wrap_angle(double a) { return std::remainder(a, kTwoPi); } // (-pi, pi]

/** Family rotation +z -> dir at theta; identity when dir is aligned with +z. */
AxisAngleRotation family_rotation_from_z(const UnitVec3& dir, double theta) {
    const double c = dir.z();
    if (c <= -1.0 + kAntipodalCap) {
        throw AntipodalDirection("standard transformation: direction antiparallel to +z");
    }
    if (c >= 1.0 - kAntipodalCap) {
        return AxisAngleRotation::identity();
    }
    return axis_from_theta(UnitVec3::zhat(), dir, theta);
}

/** Minimal rotation carrying `from` onto `to`; identity if already aligned. */
AxisAngleRotation transport_rotation(const UnitVec3& from, const UnitVec3& to) {
    const double c = from.dot(to);
    if (c >= 1.0 - 1e-15) {
        return AxisAngleRotation::identity();
    }
    if (c <= -1.0 + kAntipodalCap) {
        throw DegenerateDirections("transport rotation: directions are antiparallel");
    }
    return AxisAngleRotation(UnitVec3(from.cross(to)), std::acos(std::clamp(c, -1.0, 1.0)));
}

} // namespace

StandardTransformChoice::StandardTransformChoice(double theta, double omega0)
    : theta_(theta - kTwoPi * std::floor(theta / kTwoPi)), omega0_(omega0) {
    if (!(omega0_ > 0.0)) {
        throw std::invalid_argument("StandardTransformChoice: omega0 must be positive");
    }
}

LittleGroupParts little_group_parts(const LorentzMatrix& W) {
    LittleGroupParts parts;
    parts.angle = std::atan2(W(2, 1), W(1, 1));
    parts.alpha = W(1, 0);
    parts.beta = W(2, 0);

    const double a = parts.alpha, b = parts.beta, zeta = 0.5 * (a * a + b * b);
    const double ca = std::cos(parts.angle), sa = std::sin(parts.angle);
    // S(alpha, beta) * R_z(angle), written out
    const double rec[4][4] = {
        {1.0 + zeta, a * ca + b * sa, -a * sa + b * ca, -zeta},
        {a, ca, -sa, -a},
        {b, sa, ca, -b},
        {zeta, a * ca + b * sa, -a * sa + b * ca, 1.0 - zeta},
    };
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(rec[i][j] - W(i, j)));
    parts.reconstruction_residual = worst;
    return parts;
}

double little_group_angle(const LorentzMatrix& W) {
    return std::atan2(W(2, 1), W(1, 1));
}

double WignerResult::residual() const {
    return std::abs(wrap_angle(angle_signed - oracle_angle));
}

HelicityState::HelicityState(std::complex<double> amp_plus, std::complex<double> amp_minus,
                             const FourMomentum& p)
    : ap_(amp_plus), am_(amp_minus), p_(p) {
    const double n2 = std::norm(ap_) + std::norm(am_);
    if (std::abs(n2 - 1.0) > 1e-12) {
        throw std::invalid_argument("HelicityState: amplitudes must be normalized to 1e-12");
    }
}

HelicityState HelicityState::pure(int sigma, const FourMomentum& p) {
    if (sigma == +1) return HelicityState(1.0, 0.0, p);
    if (sigma == -1) return HelicityState(0.0, 1.0, p);
    throw std::invalid_argument("HelicityState::pure: sigma must be +1 or -1");
}

LorentzMatrix standard_transformation(const FourMomentum& p, const StandardTransformChoice& choice) {
    const AxisAngleRotation r = family_rotation_from_z(p.direction(), choice.theta());
    return embed_rotation(r) * standard_massless_boost(p.e() / choice.omega0());
}

LorentzMatrix wigner_matrix_oracle(const LorentzMatrix& Lambda, const FourMomentum& p,
                                   const StandardTransformChoice& choice) {
    const FourMomentum lp = apply(Lambda, p);
    return standard_transformation(lp, choice).inverse() * Lambda * standard_transformation(p, choice);
}

WignerResult wigner_angle_analytic(const Boost& lambda_b, const FourMomentum& p,
                                   const StandardTransformChoice& choice) {
    const LorentzMatrix Lambda = boost_matrix(lambda_b);
    const UnitVec3 phat = p.direction();
    const FourMomentum lp = apply(Lambda, p);
    const UnitVec3 lphat = lp.direction();

    const AxisAngleRotation r1 = family_rotation_from_z(phat, choice.theta());
    const AxisAngleRotation r2 = transport_rotation(phat, lphat);
    const AxisAngleRotation r3 = family_rotation_from_z(lphat, choice.theta()).inverse();

    // Signed angle, with the half-angle expansion consistency check inside.
    const double angle = wigner_angle_closed_form(r1, r2, r3);

    const UnitQuaternion composite_q = compose_three(r1, r2, r3);
    // The composite fixes +z identically, so any transverse vector-part content
    // is pure rounding; bound it absolutely (the normalized axis direction is
    // meaningless when the angle itself is at the rounding floor).
    if (std::hypot(composite_q.v().x, composite_q.v().y) > 1e-9) {
        throw std::logic_error("wigner_angle_analytic: composite rotation leaks off the +z axis");
    }
    const AxisAngleRotation composite = composite_q.to_axis_angle();

    const double oracle = little_group_angle(wigner_matrix_oracle(Lambda, p, choice));
    if (std::abs(wrap_angle(angle - oracle)) > 1e-9) {
        throw std::logic_error("wigner_angle_analytic: analytic angle " + std::to_string(angle) +
                               " disagrees with the matrix oracle " + std::to_string(oracle));
    }

    return WignerResult{
        embed_rotation(composite),
        UnitVec3::zhat(),
        angle,
        {r1, r2, r3},
        oracle,
        lp,
    };
}

double phi3_from_phi1(double phi1, double angle_zp, double angle_zLp) {
    for (double a : {phi1, angle_zp, angle_zLp}) {
        if (!(a > 0.0 && a < kPi)) {
            throw std::invalid_argument("phi3_from_phi1: arguments must lie in (0, pi)");
        }
    }
    const double t1 = std::tan(0.5 * phi1);
    const double tzp = std::tan(0.5 * angle_zp);
    const double tzl = std::tan(0.5 * angle_zLp);
    if (tzp < 1e-15 || tzl < 1e-15 || t1 < 1e-15) {
        throw DegenerateTheta("phi3_from_phi1: vanishing half-angle tangent");
    }
    return 2.0 * std::atan(t1 * tzl / tzp);
}

HelicityPhaseRecord apply_helicity_phase(const HelicityState& state, const WignerResult& w) {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> ph_plus = std::exp(i * w.angle_signed);
    const std::complex<double> ph_minus = std::exp(-i * w.angle_signed);
    HelicityState out(state.amp_plus() * ph_plus, state.amp_minus() * ph_minus,
                      w.transformed_momentum);
    return HelicityPhaseRecord{
        out,
        ph_plus,
        ph_minus,
        2.0 * w.angle_signed,
        "N(p0, Lambda)",
    };
}

} // namespace wigkit
