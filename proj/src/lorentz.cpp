#include "wigkit/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace wigkit {

namespace {

constexpr double kEta[4] = {1.0, -1.0, -1.0, -1.0};

double det4(const LorentzMatrix::Raw& a) {
    double d = 0.0;
    // cofactor expansion along the first row
    for (int c0 = 0; c0 < 4; ++c0) {
        double sub[3][3];
        for (int i = 1; i < 4; ++i) {
            int jj = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == c0) continue;
                sub[i - 1][jj++] = a[i][j];
            }
        }
        const double minor = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
                           - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
                           + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
        d += ((c0 % 2 == 0) ? 1.0 : -1.0) * a[0][c0] * minor;
    }
    return d;
}

/**
Cyclic Jacobi eigendecomposition of a symmetric 4x4. Deterministic sweep order
(upper triangle, row-major), converges quadratically; values land in `diag`,
vectors in the columns of `V`.
*/
void jacobi_eigen_sym4(std::array<std::array<double, 4>, 4> A,
                       std::array<double, 4>& diag,
                       std::array<std::array<double, 4>, 4>& V) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) V[i][j] = (i == j) ? 1.0 : 0.0;

    double scale = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) scale += A[i][j] * A[i][j];
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off += A[i][j] * A[i][j];
        if (off <= 1e-28 * scale) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (A[p][q] == 0.0) continue;
                const double theta = 0.5 * (A[q][q] - A[p][p]) / A[p][q];
                const double t = (theta >= 0.0 ? 1.0 : -1.0)
                               / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = A[k][p], akq = A[k][q];
                    A[k][p] = c * akp - s * akq;
                    A[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = A[p][k], aqk = A[q][k];
                    A[p][k] = c * apk - s * aqk;
                    A[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = V[k][p], vkq = V[k][q];
                    V[k][p] = c * vkp - s * vkq;
                    V[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    for (int i = 0; i < 4; ++i) diag[i] = A[i][i];
}

using Raw4 = std::array<std::array<double, 4>, 4>;

/** Gauss-Jordan inverse with partial pivoting. */
Raw4 inv4(Raw4 a) {
    Raw4 inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (a[pivot][col] == 0.0) {
            throw DecompositionFailure("polar_decompose: singular factor");
        }
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const double d = a[col][col];
        for (int j = 0; j < 4; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = a[r][col];
            if (f == 0.0) continue;
            for (int j = 0; j < 4; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

AxisAngleRotation rotation_from_mat3(const Mat3& R) {
    // Shepperd-style quaternion extraction, stable near angle = pi.
    const double t = R.m[0][0] + R.m[1][1] + R.m[2][2];
    double w, x, y, z;
    if (t > 0.0) {
        const double r = std::sqrt(1.0 + t);
        w = 0.5 * r;
        x = (R.m[2][1] - R.m[1][2]) / (2.0 * r);
        y = (R.m[0][2] - R.m[2][0]) / (2.0 * r);
        z = (R.m[1][0] - R.m[0][1]) / (2.0 * r);
    } else {
        int i = 0;
        if (R.m[1][1] > R.m[0][0]) i = 1;
        if (R.m[2][2] > R.m[i][i]) i = 2;
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double r = std::sqrt(1.0 + R.m[i][i] - R.m[j][j] - R.m[k][k]);
        double q[3];
        q[i] = 0.5 * r;
        w = (R.m[k][j] - R.m[j][k]) / (2.0 * r);
        q[j] = (R.m[j][i] + R.m[i][j]) / (2.0 * r);
        q[k] = (R.m[k][i] + R.m[i][k]) / (2.0 * r);
        x = q[0]; y = q[1]; z = q[2];
    }
    return UnitQuaternion(w, Vec3{x, y, z}).to_axis_angle();
}

} // namespace

FourMomentum::FourMomentum(double e, double px, double py, double pz)
    : e_(e), p_{px, py, pz} {
    if (!(e_ > 0.0)) {
        throw NotLightlike("FourMomentum: energy must be positive");
    }
    const double p2 = p_.dot(p_);
    if (std::abs(e_ * e_ - p2) > 1e-9 * e_ * e_) {
        throw NotLightlike("FourMomentum: |e^2 - |p|^2| exceeds 1e-9 e^2");
    }
}

Boost::Boost(const UnitVec3& direction, double beta) : dir_(direction), beta_(beta) {
    if (!(beta_ >= 0.0 && beta_ < 1.0)) {
        throw std::invalid_argument("Boost: beta must lie in [0, 1)");
    }
}

double Boost::gamma() const { return 1.0 / std::sqrt((1.0 - beta_) * (1.0 + beta_)); }

LorentzMatrix LorentzMatrix::identity() {
    LorentzMatrix I;
    for (int i = 0; i < 4; ++i) I.m_[i][i] = 1.0;
    return I;
}

LorentzMatrix LorentzMatrix::from_array(const Raw& raw) {
    LorentzMatrix M;
    M.m_ = raw;
    if (M.metric_residual() > 1e-10) {
        throw std::invalid_argument("LorentzMatrix: M^T eta M departs from eta beyond 1e-10");
    }
    if (!(M.m_[0][0] >= 1.0 - 1e-10)) {
        throw std::invalid_argument("LorentzMatrix: not orthochronous (m00 < 1)");
    }
    if (std::abs(det4(M.m_) - 1.0) > 1e-10) {
        throw std::invalid_argument("LorentzMatrix: determinant is not +1");
    }
    return M;
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& o) const {
    LorentzMatrix r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += m_[i][k] * o.m_[k][j];
            r.m_[i][j] = s;
        }
    return r;
}

LorentzMatrix LorentzMatrix::inverse() const {
    LorentzMatrix r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m_[i][j] = kEta[i] * m_[j][i] * kEta[j];
    return r;
}

double LorentzMatrix::metric_residual() const {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += m_[k][i] * kEta[k] * m_[k][j];
            const double target = (i == j) ? kEta[i] : 0.0;
            worst = std::max(worst, std::abs(s - target));
        }
    return worst;
}

double LorentzMatrix::det() const { return det4(m_); }

LorentzMatrix boost_matrix(const Boost& b) {
    const double g = b.gamma();
    const Vec3 n = b.direction().vec();
    LorentzMatrix::Raw raw{};
    raw[0][0] = g;
    const double gb = g * b.beta();
    raw[0][1] = raw[1][0] = gb * n.x;
    raw[0][2] = raw[2][0] = gb * n.y;
    raw[0][3] = raw[3][0] = gb * n.z;
    const double gm1 = g * g * b.beta() * b.beta() / (g + 1.0); // gamma - 1, no cancellation
    const double nn[3] = {n.x, n.y, n.z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            raw[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + gm1 * nn[i] * nn[j];
    LorentzMatrix M;
    M.m_ = raw;
    return M;
}

LorentzMatrix standard_massless_boost(double ratio) {
    if (!(ratio > 0.0)) {
        throw NonPositiveRatio("standard_massless_boost: ratio must be > 0");
    }
    const double ch = 0.5 * (ratio + 1.0 / ratio);
    const double sh = 0.5 * (ratio - 1.0 / ratio);
    LorentzMatrix::Raw raw{};
    raw[0][0] = raw[3][3] = ch;
    raw[0][3] = raw[3][0] = sh;
    raw[1][1] = raw[2][2] = 1.0;
    LorentzMatrix M;
    M.m_ = raw;
    return M;
}

LorentzMatrix embed_rotation(const AxisAngleRotation& rot) {
    const Mat3 R = rotation_matrix(rot);
    LorentzMatrix::Raw raw{};
    raw[0][0] = 1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) raw[i + 1][j + 1] = R.m[i][j];
    LorentzMatrix M;
    M.m_ = raw;
    return M;
}

FourMomentum apply(const LorentzMatrix& M, const FourMomentum& p) {
    const double in[4] = {p.e(), p.px(), p.py(), p.pz()};
    double out[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) out[i] += M(i, k) * in[k];
    return FourMomentum(out[0], out[1], out[2], out[3]); // ctor re-checks the mass shell
}

UnitVec3 aberrated_direction(const LorentzMatrix& M, const FourMomentum& p) {
    return apply(M, p).direction();
}

PolarDecomposition polar_decompose(const LorentzMatrix& M) {
    // P = M M^T, explicitly symmetrized before the eigensolve.
    std::array<std::array<double, 4>, 4> P{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += M(i, k) * M(j, k);
            P[i][j] = s;
        }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const double avg = 0.5 * (P[i][j] + P[j][i]);
            P[i][j] = P[j][i] = avg;
        }

    std::array<double, 4> lam;
    std::array<std::array<double, 4>, 4> V;
    jacobi_eigen_sym4(P, lam, V);
    for (double l : lam) {
        if (!(l > 0.0)) {
            throw DecompositionFailure("polar_decompose: non-positive eigenvalue of M M^T");
        }
    }

    Raw4 braw{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double sb = 0.0;
            for (int k = 0; k < 4; ++k) sb += V[i][k] * std::sqrt(lam[k]) * V[j][k];
            braw[i][j] = sb;
        }

    const Raw4 binvraw = inv4(braw);
    Mat3 R;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += binvraw[i + 1][k] * M(k, j + 1);
            R.m[i][j] = s;
        }
    const AxisAngleRotation rot = rotation_from_mat3(R);

    LorentzMatrix B;
    B.m_ = braw;
    const LorentzMatrix recon = B * embed_rotation(rot);
    double worst = 0.0, scale = 1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            worst = std::max(worst, std::abs(recon(i, j) - M(i, j)));
            scale = std::max(scale, std::abs(M(i, j)));
        }
    // 1e-10 absolute for order-one matrices, relative beyond that: rebuilding
    // M from the projected exact rotation cannot beat ||M|| times the rounding
    // floor once the rapidities are large.
    if (worst > 1e-10 * scale) {
        char msg[96];
        std::snprintf(msg, sizeof(msg),
                      "polar_decompose: reconstruction residual %.3e exceeds 1e-10", worst);
        throw DecompositionFailure(msg);
    }
    return PolarDecomposition{B, rot};
}

UnitVec3 thomas_axis(const UnitVec3& p, const UnitVec3& b) {
    if (std::abs(p.dot(b)) >= 1.0 - 1e-10) {
        throw DegenerateDirections("thomas_axis: boost directions are (anti)parallel");
    }
    return UnitVec3(p.cross(b));
}

double thomas_angle(double vb, double vz, double cos_bp) {
    const double gb = 1.0 / std::sqrt((1.0 - vb) * (1.0 + vb));
    const double gz = 1.0 / std::sqrt((1.0 - vz) * (1.0 + vz));
    const double gc = gb * gz * (1.0 + vb * vz * cos_bp); // composed-velocity Lorentz factor
    const double c = 1.0 - (gb - 1.0) * (gz - 1.0) * (1.0 - cos_bp * cos_bp) / (gc + 1.0);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

} // namespace wigkit
