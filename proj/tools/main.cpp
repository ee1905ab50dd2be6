#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wigkit/sweep.hpp"

namespace {

using namespace wigkit;

UnitVec3 parse_triple(const std::string& text) {
    std::istringstream in(text);
    double x, y, z;
    char c1, c2;
    if (!(in >> x >> c1 >> y >> c2 >> z) || c1 != ',' || c2 != ',') {
        throw std::invalid_argument("expected x,y,z in '" + text + "'");
    }
    std::string rest;
    if (in >> rest) {
        throw std::invalid_argument("trailing characters in '" + text + "'");
    }
    return UnitVec3(x, y, z);
}

struct CommonFlags {
    std::string p_hat;
    std::string b_hat;
    std::string v_z;
    std::string v_b;
    std::optional<double> theta;
    std::optional<double> ratio;

    EvalParams to_params() const {
        EvalParams p;
        if (!p_hat.empty()) p.p_hat = parse_triple(p_hat);
        if (!b_hat.empty()) p.b_hat = parse_triple(b_hat);
        if (!v_b.empty()) p.v_b = parse_velocity(v_b);
        if (theta) p.theta = *theta;
        if (ratio) {
            p.ratio = *ratio;
        } else if (!v_z.empty()) {
            p.ratio = ratio_from_beta(parse_velocity(v_z));
        }
        if (!(p.ratio > 0.0)) throw NonPositiveRatio("ratio must be > 0");
        if (!(p.v_b >= 0.0 && p.v_b < 1.0)) {
            throw std::invalid_argument("v_b must be sub-luminal");
        }
        return p;
    }
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--p-hat", f.p_hat, "momentum direction x,y,z (normalized on input)");
    cmd->add_option("--b-hat", f.b_hat, "boost direction x,y,z (normalized on input)");
    cmd->add_option("--v-z", f.v_z, "frame boost speed along +z: beta, or with km/s suffix");
    cmd->add_option("--v-b", f.v_b, "boost speed: beta, or with km/s suffix");
    cmd->add_option("--theta", [&f](const CLI::results_t& r) {
        f.theta = std::stod(r[0]);
        return true;
    }, "rotation-family parameter in radians");
    cmd->add_option("--ratio", [&f](const CLI::results_t& r) {
        f.ratio = std::stod(r[0]);
        return true;
    }, "frequency ratio p0/omega0 (overrides --v-z)");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void print_rotation(const char* name, const AxisAngleRotation& r) {
    std::cout << name << ": axis=(" << fmt(r.axis().x()) << ", " << fmt(r.axis().y()) << ", "
              << fmt(r.axis().z()) << ") angle=" << fmt(r.angle()) << "\n";
}

int run_eval(const CommonFlags& flags) {
    const EvalParams params = flags.to_params();
    const EvalResult r = evaluate(params);
    std::cout << "phi_W (analytic) = " << fmt(r.phi_w) << "\n";
    std::cout << "phi_W (oracle)   = " << fmt(r.phi_w_oracle) << "\n";
    std::cout << "residual         = " << fmt(r.residual) << "\n";
    std::cout << "phi_2 (Thomas)   = " << fmt(r.phi_2) << "\n";
    print_rotation("n1", r.n1);
    print_rotation("n2", r.n2);
    print_rotation("n3", r.n3);
    if (r.excess) {
        std::cout << "excess (z, p, Lp) = " << fmt(*r.excess) << "\n";
    }
    return r.residual <= 1e-9 ? 0 : 1;
}

int run_sweep_cmd(const CommonFlags& flags, const std::string& sweep_arg,
                  const std::string& out_path, const std::string& svg_path) {
    const SweepSpec spec = parse_sweep(sweep_arg, flags.to_params());
    const std::vector<SweepRow> rows = run_sweep(spec);
    if (out_path.empty()) {
        write_csv(std::cout, spec, rows);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        write_csv(out, spec, rows);
    }
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw std::runtime_error("cannot open " + svg_path);
        write_svg(svg, spec, rows);
    }
    return 0;
}

int run_verify_cmd(std::uint64_t seed, int trials) {
    const std::vector<SuiteResult> suites = run_verify(seed, trials);
    bool all_pass = true;
    std::cout << "seed=" << seed << " trials=" << trials << "\n";
    for (const SuiteResult& s : suites) {
        std::cout << (s.pass ? "PASS" : "FAIL") << " " << s.name
                  << ": max residual " << fmt(s.max_residual) << " (tolerance " << fmt(s.tolerance)
                  << ")\n";
        if (!s.pass) {
            std::cout << "     offending configuration: " << s.worst_config << "\n";
            all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wigner little-group rotations of lightlike momenta: closed-form and "
                 "matrix-composition routes, figure sweeps, and a seeded verification battery"};
    app.require_subcommand(1);

    CommonFlags eval_flags;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a single configuration");
    add_common(eval_cmd, eval_flags);

    CommonFlags sweep_flags;
    std::string sweep_arg, out_path, svg_path;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep one variable, emit CSV (and SVG)");
    add_common(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--sweep", sweep_arg, "var:start:stop:count with var in {angle_zp, v_b, theta}")
        ->required();
    sweep_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
    sweep_cmd->add_option("--svg", svg_path, "SVG plot output path");

    std::uint64_t seed = 42;
    int trials = 1000;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the seeded verification battery");
    verify_cmd->add_option("--seed", seed, "generator seed");
    verify_cmd->add_option("--trials", trials, "number of random trials per suite");

    try {
        app.parse(argc, argv);
        if (eval_cmd->parsed()) return run_eval(eval_flags);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_flags, sweep_arg, out_path, svg_path);
        if (verify_cmd->parsed()) return run_verify_cmd(seed, trials);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
