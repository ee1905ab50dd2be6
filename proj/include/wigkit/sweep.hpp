#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wigkit/wigner.hpp"

namespace wigkit {

/** Frequency ratio p0/omega0 of the +z boost with speed beta: e^rapidity. */
inline double ratio_from_beta(double beta) { return std::sqrt((1.0 + beta) / (1.0 - beta)); }
/** Signed speed of the +z boost with frequency ratio r: tanh(ln r). */
inline double beta_from_ratio(double r) { return (r * r - 1.0) / (r * r + 1.0); }

/** Parse a velocity given either as a dimensionless beta or with a km/s suffix. */
double parse_velocity(const std::string& text);

/** Fixed parameters of a single evaluation; defaults follow the reference configuration. */
struct EvalParams {
    UnitVec3 p_hat{std::sin(0.25 * 3.14159265358979323846), 0.0,
                   -std::cos(0.25 * 3.14159265358979323846)};
    UnitVec3 b_hat{std::cos(0.25 * 3.14159265358979323846),
                   std::sin(0.25 * 3.14159265358979323846), 0.0};
    double v_b = 8.0 / kLightSpeedKmPerS;
    double theta = 0.5 * 3.14159265358979323846;
    double ratio = ratio_from_beta(2.0 / 3.0); // p0/omega0, sqrt(5) for v_z = 2/3
    double omega0 = 1.0;

    /** Speed of the frame boost implied by the ratio (absolute value). */
    double effective_v_z() const { return std::abs(beta_from_ratio(ratio)); }
};

/** Everything cmd_eval reports for one configuration. */
struct EvalResult {
    double phi_w;          // analytic, signed about +z
    double phi_w_oracle;   // matrix-composition extraction
    double residual;       // wrap-aware |phi_w - phi_w_oracle|
    double phi_2;          // two-boost Thomas angle for the configuration
    AxisAngleRotation n1, n2, n3;
    std::optional<double> excess; // spherical excess of (z, p, Lambda p), theta = pi/2 only
    UnitVec3 aberrated;    // direction of Lambda p
};

EvalResult evaluate(const EvalParams& params);

enum class SweepVariable { AngleZp, Vb, Theta };

const char* to_string(SweepVariable v);

/** A linear grid over one variable with all other parameters fixed. */
struct SweepSpec {
    SweepVariable variable = SweepVariable::AngleZp;
    double start = 0.0;
    double stop = 1.0;
    int count = 2; // >= 2
    EvalParams fixed;
};

/** Parse "var:start:stop:count"; start/stop of a v_b sweep may carry a km/s suffix. */
SweepSpec parse_sweep(const std::string& text, const EvalParams& fixed);

struct SweepRow {
    double value = 0.0;
    double phi_w = 0.0;
    double phi_w_oracle = 0.0;
    double phi_2 = 0.0;
    std::optional<double> excess;
    double residual = 0.0;
    bool ok = false;
    std::string status; // "ok" or "degenerate:<reason>"
};

/**
Evaluate the grid in order. Degenerate points are emitted as flagged rows with
blank numeric cells rather than aborting; on any ok row the analytic/oracle
residual must not exceed 1e-9 (std::runtime_error otherwise).
*/
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/** CSV with '#' parameter comments and 17-significant-digit values; byte-deterministic. */
void write_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows);

/** Minimal line-plot SVG of phi_w (and phi_2) against the sweep variable. */
void write_svg(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows);

/** One verification suite outcome. */
struct SuiteResult {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::string worst_config; // replayable description of the worst case
};

/**
Seeded verification battery: analytic/oracle equivalence, frequency
independence, Thomas closed form against polar decomposition, and the
spherical-excess identity at theta = pi/2.
*/
std::vector<SuiteResult> run_verify(std::uint64_t seed, int trials);

} // namespace wigkit
