// Command-line front-end: integrate generating curves, sweep surfaces, and
// run verifier suites from reproducible run-spec files.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vertinv/vertinv.hpp"

namespace {

using namespace vertinv;

CurveState parse_ic_flag(const std::string& text) {
    CurveState s;
    char tail = '\0';
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &s.x, &s.y, &s.theta, &tail) != 3)
        throw std::invalid_argument("--ic expects 'x,y,theta', got '" + text + "'");
    return s;
}

// Closed-form evaluation on the same t-grid integrate() would use. Only the
// two targets with explicit solutions are supported.
Trajectory closed_form_trajectory(const RunSpec& spec) {
    OdeProblem p = to_problem(spec);
    double lo = std::min(p.t0, p.t1), hi = std::max(p.t0, p.t1);
    if (!(lo <= 0.0 && 0.0 <= hi))
        throw std::invalid_argument("t-span must contain 0 (the initial-state anchor)");
    long n_neg = detail::grid_count(-lo, p.step);
    long n_pos = detail::grid_count(hi, p.step);

    Trajectory out;
    out.problem = p;
    out.method = "closed";

    if (p.target.kind == Target::Kind::ZeroGauss) {
        ZeroKParams zp = ZeroKParams::from_initial(p.initial);
        ZeroKDomain dom = zero_k_domain(zp);
        for (long k = -n_neg; k <= n_pos; ++k) {
            double t = static_cast<double>(k) * p.step;
            if (!dom.contains(t)) throw singularity_error(p.initial, t);
            Vec2 pos = zero_k_point(zp, t);
            ZeroKPolar polar = zero_k_solution(zp, t);
            double rprime = zp.a == 0.0 ? 0.0 : zp.a / (2.0 * polar.r);
            double aprime = zero_k_alpha_prime(zp, t);
            double ca = std::cos(polar.alpha), sa = std::sin(polar.alpha);
            double theta = std::atan2(rprime * sa + polar.r * aprime * ca,
                                      rprime * ca - polar.r * aprime * sa);
            CurveState s{pos.x, pos.y, theta};
            out.samples.push_back(
                {t, s, zero_gauss_theta_prime(s, p.singular_guard, t)});
        }
    } else if (p.ambient.kind() == Kind::Nil3 && p.target.H == 0.0) {
        const CurveState& ic = p.initial;
        double tn = std::tan(ic.theta);
        if (!(ic.theta > 0.0 && ic.theta < std::numbers::pi / 2.0))
            throw std::invalid_argument(
                "closed-form nil3 evaluation needs theta0 in (0, pi/2)");
        double a = (1.0 + ic.y * ic.y) * tn * tn;
        double hyp = std::sqrt(1.0 + ic.y * ic.y);
        NilParams np;
        np.a = a;
        np.c1 = nil_f(a, ic.y);
        np.c2 = ic.x - (std::asinh(ic.y) + ic.y * hyp) / (2.0 * std::sqrt(a));
        Ambient nil = Ambient::nil3();
        for (long k = -n_neg; k <= n_pos; ++k) {
            double t = static_cast<double>(k) * p.step;
            CurveState s = nil_solution(np, t);
            out.samples.push_back({t, s, minimal_theta_prime(nil, s)});
        }
    } else {
        throw std::invalid_argument(
            "--method closed supports nil3 with --H 0 and e2:1 with --K0");
    }
    if (p.t0 > p.t1) std::reverse(out.samples.begin(), out.samples.end());
    return out;
}

Trajectory make_trajectory(const RunSpec& spec) {
    if (spec.method == "closed") return closed_form_trajectory(spec);
    return integrate(to_problem(spec));
}

void print_summary(const Trajectory& traj) {
    double max_kappa = 0.0;
    for (const auto& smp : traj.samples) max_kappa = std::max(max_kappa, std::abs(smp.kappa));
    std::printf("samples = %zu\n", traj.samples.size());
    std::printf("max|kappa| = %.6g\n", max_kappa);
    try {
        VerifyReport drift = first_integral_drift(traj, HUGE_VAL);
        std::printf("first-integral drift = %.6g\n", drift.measured);
    } catch (const std::invalid_argument&) {
        // no conserved quantity known for this run
    }
}

int cmd_integrate(const RunSpec& spec) {
    Trajectory traj = make_trajectory(spec);
    print_summary(traj);
    if (!spec.csv_out.empty())
        export_trajectory_csv(traj, spec.csv_out, runspec_comment_lines(spec));
    return 0;
}

int cmd_surface(const RunSpec& spec) {
    Trajectory traj = make_trajectory(spec);
    SurfaceMesh mesh = generate_mesh(parse_ambient(spec.ambient), traj, spec.s0,
                                     spec.s1, spec.ns, spec.decimate);
    export_mesh(mesh, spec.mesh_out, runspec_comment_lines(spec));
    std::printf("vertices = %zu\n", mesh.vertices.size());
    std::printf("faces = %zu\n", mesh.faces.size());
    if (!spec.csv_out.empty())
        export_trajectory_csv(traj, spec.csv_out, runspec_comment_lines(spec));
    return 0;
}

VerifyReport run_check(const std::string& name, const RunSpec& spec,
                       const Trajectory& traj) {
    if (name == "curvature_bound") return curvature_bound(traj);
    if (name == "kappa_ode_residual")
        return kappa_ode_residual(traj, spec.tol_kappa_residual);
    if (name == "symmetry_check") return symmetry_check(traj);
    if (name == "classify_type") {
        CurveType type = classify_type(traj, spec.tol_classify);
        VerifyReport r;
        r.name = "classify_type";
        r.pass = true;
        r.measured = type == CurveType::TypeI ? 1.0 : 2.0;
        r.tolerance = 0.0;
        r.detail = type == CurveType::TypeI ? "TypeI" : "TypeII";
        return r;
    }
    if (name == "constant_theta_axes_check")
        return constant_theta_axes_check(parse_ambient(spec.ambient).param());
    if (name == "continuous_dependence")
        return continuous_dependence_check(spec.ic, spec.t0, spec.t1,
                                           spec.tol_continuous_eps, spec.step);
    if (name == "first_integral_drift")
        return first_integral_drift(traj, spec.tol_first_integral);
    if (name == "self_intersections")
        return self_intersection_count(traj, spec.expect_self_intersections.value_or(0),
                                       spec.spatial_tol);
    throw std::invalid_argument("unknown verifier: " + name);
}

int cmd_verify(const std::string& spec_path, const std::vector<std::string>& only) {
    RunSpec spec = parse_runspec(detail::read_file(spec_path));
    std::vector<std::string> checks = only.empty() ? spec.verifiers : only;
    if (checks.empty())
        throw std::invalid_argument(
            "no verifiers selected (set 'verifiers' in the run spec or pass --check)");

    Trajectory traj = make_trajectory(spec);

    nlohmann::json report = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& name : checks) {
        VerifyReport r = run_check(name, spec, traj);
        std::printf("%s\n", to_line(r).c_str());
        nlohmann::json entry{{"name", r.name},
                             {"pass", r.pass},
                             {"measured", r.measured},
                             {"tolerance", r.tolerance},
                             {"detail", r.detail}};
        if (r.witness)
            entry["witness"] = {{"t", r.witness->t},
                                {"x", r.witness->state.x},
                                {"y", r.witness->state.y},
                                {"theta", r.witness->state.theta},
                                {"kappa", r.witness->kappa}};
        report.push_back(entry);
        all_pass = all_pass && r.pass;
    }
    std::string report_path =
        spec.report_out.empty() ? spec_path + ".report.json" : spec.report_out;
    detail::write_file(report_path, report.dump(2) + "\n");
    return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertically invariant surfaces in R^2 x| R: curves, meshes, checks"};
    app.require_subcommand(1);

    RunSpec spec;
    std::string ic_text = "0,0,0";
    bool k0 = false;
    bool h_set = false;

    auto add_curve_flags = [&](CLI::App* cmd) {
        cmd->add_option("--ambient", spec.ambient,
                        "ambient space: euclid | sol3:c | nil3 | e2:c")
            ->required();
        cmd->add_option("--H", spec.H, "target mean curvature")
            ->each([&](const std::string&) { h_set = true; });
        cmd->add_flag("--K0", k0, "target zero Gaussian curvature (e2:1 only)");
        cmd->add_option("--ic", ic_text, "initial state x,y,theta (radians)")
            ->required();
        cmd->add_option("--t0", spec.t0, "span start (span must contain 0)");
        cmd->add_option("--t1", spec.t1, "span end");
        cmd->add_option("--step", spec.step, "integrator step")->check(CLI::PositiveNumber);
        cmd->add_option("--method", spec.method, "rk4 | closed")
            ->check(CLI::IsMember({"rk4", "closed"}));
    };

    CLI::App* integrate_cmd =
        app.add_subcommand("integrate", "integrate a generating curve and write CSV");
    add_curve_flags(integrate_cmd);
    integrate_cmd->add_option("--out", spec.csv_out, "trajectory CSV path")->required();

    CLI::App* surface_cmd =
        app.add_subcommand("surface", "sweep a generating curve into a mesh");
    add_curve_flags(surface_cmd);
    surface_cmd->add_option("--out", spec.csv_out, "also write the trajectory CSV");
    surface_cmd->add_option("--s0", spec.s0, "sweep start")->required();
    surface_cmd->add_option("--s1", spec.s1, "sweep end")->required();
    surface_cmd->add_option("--ns", spec.ns, "sweep samples (>= 2)")->required();
    surface_cmd->add_option("--decimate", spec.decimate, "keep every k-th curve node");
    surface_cmd->add_option("--mesh-out", spec.mesh_out, "mesh output path")->required();

    std::string verify_spec_path;
    std::vector<std::string> verify_only;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run verifier checks from a run-spec file");
    verify_cmd->add_option("spec", verify_spec_path, "run-spec file")->required();
    verify_cmd->add_option("--check", verify_only,
                           "run only these checks (default: the run spec's list)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (integrate_cmd->parsed() || surface_cmd->parsed()) {
            if (k0 == h_set)
                throw std::invalid_argument("specify exactly one of --H and --K0");
            spec.zero_gauss = k0;
            spec.ic = parse_ic_flag(ic_text);
            return integrate_cmd->parsed() ? cmd_integrate(spec) : cmd_surface(spec);
        }
        return cmd_verify(verify_spec_path, verify_only);
    } catch (const vertinv::singularity_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
