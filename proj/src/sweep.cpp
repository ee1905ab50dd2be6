#include "wigkit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "wigkit/random.hpp"
#include "wigkit/spherical.hpp"

namespace wigkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_vec(const UnitVec3& v) {
    return fmt(v.x()) + "," + fmt(v.y()) + "," + fmt(v.z());
}

double wrap_angle(double a) { return std::remainder(a, 2.0 * kPi); }

/** Replayable flag string identifying one configuration. */
std::string config_flags(const EvalParams& p) {
    return "--p-hat " + fmt_vec(p.p_hat) + " --b-hat " + fmt_vec(p.b_hat) +
           " --v-b " + fmt(p.v_b) + " --theta " + fmt(p.theta) + " --ratio " + fmt(p.ratio);
}

} // namespace

double parse_velocity(const std::string& text) {
    std::string body = text;
    double scale = 1.0;
    const std::string suffix = "km/s";
    if (body.size() > suffix.size() &&
        body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0) {
        body = body.substr(0, body.size() - suffix.size());
        scale = 1.0 / kLightSpeedKmPerS;
    }
    size_t pos = 0;
    const double value = std::stod(body, &pos);
    if (pos != body.size()) {
        throw std::invalid_argument("parse_velocity: trailing characters in '" + text + "'");
    }
    return value * scale;
}

EvalResult evaluate(const EvalParams& params) {
    const Boost lb(params.b_hat, params.v_b);
    const FourMomentum p =
        FourMomentum::from_direction(params.ratio * params.omega0, params.p_hat);
    const StandardTransformChoice choice(params.theta, params.omega0);

    const WignerResult w = wigner_angle_analytic(lb, p, choice);

    // Thomas angle of the boost pair behind this configuration: the +z-frame
    // boost conjugated onto the momentum direction (toward -p for ratio < 1),
    // composed with the outer boost.
    const double vz = params.effective_v_z();
    const UnitVec3 inner = params.ratio >= 1.0 ? params.p_hat : params.p_hat.negated();
    const double phi2 = thomas_angle(params.v_b, vz, params.b_hat.dot(inner));

    std::optional<double> excess;
    if (std::abs(params.theta - 0.5 * kPi) < 1e-12) {
        try {
            const SphericalTriangle t(UnitVec3::zhat(), params.p_hat,
                                      w.transformed_momentum.direction());
            excess = excess_from_angle_sum(t);
        } catch (const DegenerateTriangle&) {
            // coincident or coplanar vertices: no triangle, no excess to report
        }
    }

    return EvalResult{
        w.angle_signed,
        w.oracle_angle,
        w.residual(),
        phi2,
        w.rotations[0],
        w.rotations[1],
        w.rotations[2],
        excess,
        w.transformed_momentum.direction(),
    };
}

const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::AngleZp: return "angle_zp";
        case SweepVariable::Vb: return "v_b";
        case SweepVariable::Theta: return "theta";
    }
    return "?";
}

SweepSpec parse_sweep(const std::string& text, const EvalParams& fixed) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) {
        throw std::invalid_argument("sweep spec must be var:start:stop:count");
    }
    SweepSpec spec;
    spec.fixed = fixed;
    if (parts[0] == "angle_zp") {
        spec.variable = SweepVariable::AngleZp;
    } else if (parts[0] == "v_b") {
        spec.variable = SweepVariable::Vb;
    } else if (parts[0] == "theta") {
        spec.variable = SweepVariable::Theta;
    } else {
        throw std::invalid_argument("sweep variable must be one of angle_zp, v_b, theta");
    }
    if (spec.variable == SweepVariable::Vb) {
        spec.start = parse_velocity(parts[1]);
        spec.stop = parse_velocity(parts[2]);
    } else {
        spec.start = std::stod(parts[1]);
        spec.stop = std::stod(parts[2]);
    }
    spec.count = std::stoi(parts[3]);
    if (spec.count < 2) {
        throw std::invalid_argument("sweep count must be >= 2");
    }
    if (!(spec.start < spec.stop)) {
        throw std::invalid_argument("sweep start must be < stop");
    }
    for (double v : {spec.start, spec.stop}) {
        if (spec.variable == SweepVariable::Vb && !(v >= 0.0 && v < 1.0)) {
            throw std::invalid_argument("sweep velocities must be sub-luminal");
        }
    }
    return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    std::vector<SweepRow> rows;
    rows.reserve(spec.count);
    for (int i = 0; i < spec.count; ++i) {
        const double value = spec.start + (spec.stop - spec.start) * i / (spec.count - 1);
        EvalParams params = spec.fixed;
        switch (spec.variable) {
            case SweepVariable::AngleZp:
                params.p_hat = UnitVec3(std::sin(value), 0.0, -std::cos(value));
                break;
            case SweepVariable::Vb:
                params.v_b = value;
                break;
            case SweepVariable::Theta:
                params.theta = value;
                break;
        }
        SweepRow row;
        row.value = value;
        try {
            const EvalResult r = evaluate(params);
            row.phi_w = r.phi_w;
            row.phi_w_oracle = r.phi_w_oracle;
            row.phi_2 = r.phi_2;
            row.excess = r.excess;
            row.residual = r.residual;
            row.ok = true;
            row.status = "ok";
            if (row.residual > 1e-9) {
                throw std::runtime_error("sweep: analytic/oracle residual " + fmt(row.residual) +
                                         " exceeds 1e-9 at " +
                                         std::string(to_string(spec.variable)) + "=" + fmt(value));
            }
        } catch (const DegenerateDirections& e) {
            row.status = std::string("degenerate:") + e.what();
        } catch (const AntipodalDirection& e) {
            row.status = std::string("degenerate:") + e.what();
        } catch (const DegenerateTheta& e) {
            row.status = std::string("degenerate:") + e.what();
        } catch (const NotLightlike& e) {
            row.status = std::string("degenerate:") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    os << "# wigkit sweep\n";
    os << "# variable=" << to_string(spec.variable) << " start=" << fmt(spec.start)
       << " stop=" << fmt(spec.stop) << " count=" << spec.count << "\n";
    os << "# p_hat=" << fmt_vec(spec.fixed.p_hat) << " b_hat=" << fmt_vec(spec.fixed.b_hat)
       << "\n";
    os << "# v_b=" << fmt(spec.fixed.v_b) << " theta=" << fmt(spec.fixed.theta)
       << " ratio=" << fmt(spec.fixed.ratio) << " omega0=" << fmt(spec.fixed.omega0)
       << " v_z_effective=" << fmt(spec.fixed.effective_v_z()) << "\n";
    os << "# velocities given in km/s are divided by c = 299792.458 km/s exactly\n";
    os << "value,phi_w,phi_w_oracle,phi_2,excess,residual,status\n";
    for (const SweepRow& row : rows) {
        os << fmt(row.value) << ",";
        if (row.ok) {
            os << fmt(row.phi_w) << "," << fmt(row.phi_w_oracle) << "," << fmt(row.phi_2) << ",";
            if (row.excess) {
                os << fmt(*row.excess);
            }
            os << "," << fmt(row.residual);
        } else {
            os << ",,,,";
        }
        os << "," << row.status << "\n";
    }
}

void write_svg(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    const int width = 720, height = 480;
    const int ml = 80, mr = 20, mt = 40, mb = 60;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const SweepRow& r : rows) {
        if (!r.ok) continue;
        xmin = std::min(xmin, r.value);
        xmax = std::max(xmax, r.value);
        ymin = std::min({ymin, r.phi_w, r.phi_2});
        ymax = std::max({ymax, r.phi_w, r.phi_2});
    }
    if (!(xmin < xmax)) { // nothing plottable
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\"/>\n";
        return;
    }
    if (ymin == ymax) {
        ymin -= 1.0;
        ymax += 1.0;
    }
    const auto X = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * (width - ml - mr); };
    const auto Y = [&](double v) { return height - mb - (v - ymin) / (ymax - ymin) * (height - mt - mb); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
       << "Wigner angle vs " << to_string(spec.variable) << "</text>\n";

    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
       << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
       << height - mb << "\" stroke=\"black\"/>\n";
    char label[64];
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4;
        const double yv = ymin + (ymax - ymin) * i / 4;
        std::snprintf(label, sizeof(label), "%.3g", xv);
        os << "<text x=\"" << X(xv) << "\" y=\"" << height - mb + 18
           << "\" text-anchor=\"middle\" font-size=\"11\">" << label << "</text>\n";
        std::snprintf(label, sizeof(label), "%.3g", yv);
        os << "<text x=\"" << ml - 6 << "\" y=\"" << Y(yv) + 4
           << "\" text-anchor=\"end\" font-size=\"11\">" << label << "</text>\n";
    }
    os << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 16
       << "\" text-anchor=\"middle\" font-size=\"13\">" << to_string(spec.variable)
       << (spec.variable == SweepVariable::Vb ? " (beta)" : " (rad)") << "</text>\n";
    os << "<text x=\"18\" y=\"" << (mt + height - mb) / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
       << (mt + height - mb) / 2 << ")\">phi_W (rad)</text>\n";

    const auto polyline = [&](double SweepRow::*field, const char* color, const char* dash) {
        os << "<polyline fill=\"none\" stroke=\"" << color << "\"" << dash << " points=\"";
        for (const SweepRow& r : rows) {
            if (!r.ok) continue;
            os << X(r.value) << "," << Y(r.*field) << " ";
        }
        os << "\"/>\n";
    };
    polyline(&SweepRow::phi_w, "#1f77b4", "");
    polyline(&SweepRow::phi_2, "#d62728", " stroke-dasharray=\"6 3\"");
    os << "<text x=\"" << width - mr - 10 << "\" y=\"" << mt + 14
       << "\" text-anchor=\"end\" font-size=\"12\" fill=\"#1f77b4\">phi_W</text>\n";
    os << "<text x=\"" << width - mr - 10 << "\" y=\"" << mt + 30
       << "\" text-anchor=\"end\" font-size=\"12\" fill=\"#d62728\">phi_2 (Thomas)</text>\n";
    os << "</svg>\n";
}

std::vector<SuiteResult> run_verify(std::uint64_t seed, int trials) {
    if (trials < 1) {
        throw std::invalid_argument("run_verify: trials must be >= 1");
    }
    std::vector<SuiteResult> results;

    // Shared sampler: one configuration in the verification domain.
    const auto sample_config = [](Rng& rng) {
        EvalParams p;
        do {
            p.p_hat = rng.unit_vector();
        } while (p.p_hat.z() <= -1.0 + 1e-6);
        p.b_hat = rng.unit_vector();
        p.v_b = rng.uniform(1e-6, 0.99);
        p.theta = rng.uniform(0.0, 2.0 * kPi);
        const double vz = rng.uniform(0.01, 0.99);
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        p.ratio = std::exp(sign * std::atanh(vz));
        return p;
    };

    {
        SuiteResult s{"analytic-vs-oracle", true, 0.0, 1e-9, ""};
        Rng rng(seed);
        for (int t = 0; t < trials; ++t) {
            EvalParams p;
            while (true) {
                p = sample_config(rng);
                try {
                    const EvalResult r = evaluate(p);
                    if (r.residual > s.max_residual) {
                        s.max_residual = r.residual;
                        s.worst_config = config_flags(p);
                    }
                    break;
                } catch (const AntipodalDirection&) {
                    // transformed direction fell inside the antipodal cap; redraw
                } catch (const std::logic_error& e) {
                    s.pass = false;
                    s.max_residual = std::numeric_limits<double>::infinity();
                    s.worst_config = config_flags(p) + "  (" + e.what() + ")";
                    break;
                }
            }
            if (!s.pass) break;
        }
        s.pass = s.pass && s.max_residual <= s.tolerance;
        results.push_back(std::move(s));
    }

    {
        SuiteResult s{"frequency-independence", true, 0.0, 1e-10, ""};
        Rng rng(seed + 1);
        const int n = std::max(1, trials / 10);
        for (int t = 0; t < n; ++t) {
            EvalParams p = sample_config(rng);
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            bool skip = false;
            for (double ratio : {1e-3, 1.0, 1e3}) {
                p.ratio = ratio;
                try {
                    const EvalResult r = evaluate(p);
                    lo = std::min({lo, r.phi_w, r.phi_w_oracle});
                    hi = std::max({hi, r.phi_w, r.phi_w_oracle});
                } catch (const AntipodalDirection&) {
                    skip = true;
                    break;
                }
            }
            if (skip) continue;
            if (hi - lo > s.max_residual) {
                s.max_residual = hi - lo;
                s.worst_config = config_flags(p);
            }
        }
        s.pass = s.max_residual <= s.tolerance;
        results.push_back(std::move(s));
    }

    {
        SuiteResult s{"thomas-vs-polar-decomposition", true, 0.0, 1e-9, ""};
        Rng rng(seed + 2);
        for (int t = 0; t < trials; ++t) {
            UnitVec3 d1 = rng.unit_vector(), d2 = rng.unit_vector();
            while (std::abs(d1.dot(d2)) >= 1.0 - 1e-6) d2 = rng.unit_vector();
            const double v1 = rng.uniform(0.01, 0.99);
            const double v2 = rng.uniform(0.01, 0.99);
            const LorentzMatrix M = boost_matrix(Boost(d2, v2)) * boost_matrix(Boost(d1, v1));
            const PolarDecomposition pd = polar_decompose(M);
            const double closed = thomas_angle(v2, v1, d1.dot(d2));
            const UnitVec3 axis = thomas_axis(d1, d2);
            const Vec3 diff = pd.rotation_part.axis().vec() - axis.vec();
            const double resid =
                std::max(std::abs(pd.rotation_part.angle() - closed), diff.norm());
            if (resid > s.max_residual) {
                s.max_residual = resid;
                s.worst_config = "inner=" + fmt_vec(d1) + " outer=" + fmt_vec(d2) +
                                 " v_inner=" + fmt(v1) + " v_outer=" + fmt(v2);
            }
        }
        s.pass = s.max_residual <= s.tolerance;
        results.push_back(std::move(s));
    }

    {
        SuiteResult s{"spherical-excess-theta-pi-2", true, 0.0, 1e-9, ""};
        Rng rng(seed + 3);
        for (int t = 0; t < trials; ++t) {
            EvalParams p;
            double resid = 0.0;
            while (true) {
                p = sample_config(rng);
                p.theta = 0.5 * kPi;
                p.v_b = rng.uniform(1e-3, 0.99);
                try {
                    const EvalResult r = evaluate(p);
                    if (!r.excess) continue; // triangle degenerate at this draw; redraw
                    const SphericalTriangle tri(UnitVec3::zhat(), p.p_hat, r.aberrated);
                    const SphericalTriangle pol = polar_triangle(tri);
                    const double e_axes = excess_from_axes(pol.v1(), pol.v2(), pol.v3());
                    const double e_sum = *r.excess;
                    const double e_lh = lhuilier_excess(angle_between(UnitVec3::zhat(), p.p_hat),
                                                        angle_between(p.p_hat, r.aberrated),
                                                        angle_between(r.aberrated, UnitVec3::zhat()));
                    for (double e : {e_axes, e_sum, e_lh}) {
                        resid = std::max(resid,
                                         std::abs(std::abs(wrap_angle(e)) - std::abs(r.phi_w)));
                    }
                    break;
                } catch (const AntipodalDirection&) {
                } catch (const DegenerateTriangle&) {
                } catch (const DegenerateDirections&) {
                }
            }
            if (resid > s.max_residual) {
                s.max_residual = resid;
                s.worst_config = config_flags(p);
            }
        }
        s.pass = s.max_residual <= s.tolerance;
        results.push_back(std::move(s));
    }

    return results;
}

} // namespace wigkit
