#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

#include "vertinv/closedform.hpp"
#include "vertinv/intersect.hpp"
#include "vertinv/ode.hpp"

namespace vertinv {

// Outcome of one executable check: the measured extremum, the tolerance it
// was held against, and (when something is wrong or worth inspecting) the
// sample that achieved the extremum.
struct VerifyReport {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::optional<TrajectorySample> witness;
    std::string detail;
};

inline std::string to_line(const VerifyReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-26s %s  measured=%.6g tolerance=%.6g%s%s",
                  r.name.c_str(), r.pass ? "PASS" : "FAIL", r.measured, r.tolerance,
                  r.detail.empty() ? "" : "  ", r.detail.c_str());
    std::string line = buf;
    if (r.witness) {
        std::snprintf(buf, sizeof buf, "  [t=%.6g state=(%.6g, %.6g, %.6g)]",
                      r.witness->t, r.witness->state.x, r.witness->state.y,
                      r.witness->state.theta);
        line += buf;
    }
    return line;
}

namespace detail {

inline void require_minimal_e2(const Trajectory& traj, bool flat_only,
                               const char* who) {
    const OdeProblem& p = traj.problem;
    bool e2 = p.ambient.kind() == Kind::E2tilde;
    bool minimal =
        p.target.kind == Target::Kind::MeanCurvature && p.target.H == 0.0;
    if (!e2 || !minimal || (flat_only && p.ambient.param() != 1.0))
        throw std::invalid_argument(std::string(who) + " needs a minimal e2" +
                                    (flat_only ? ":1" : "") + " trajectory");
}

}  // namespace detail

// Signed distance from the origin to the tangent line (the curve's support
// function); ties position to curvature along flat-chart minimal curves.
inline double support_function(const CurveState& s) {
    return -s.x * std::sin(s.theta) + s.y * std::cos(s.theta);
}

// Global bound |kappa| <= c/2 for minimal curves in e2:c, plus the
// pointwise bound |kappa| <= |gamma|/(1+|gamma|^2) in the flat chart.
inline VerifyReport curvature_bound(const Trajectory& traj) {
    detail::require_minimal_e2(traj, false, "curvature_bound");
    double c = traj.problem.ambient.param();
    double slack = 1e-12;

    VerifyReport r;
    r.name = "curvature_bound";
    r.tolerance = 0.5 * c + slack;
    double pointwise_excess = -1.0;
    const TrajectorySample* worst = nullptr;
    for (const auto& smp : traj.samples) {
        double k = std::abs(smp.kappa);
        if (k > r.measured) {
            r.measured = k;
            worst = &smp;
        }
        if (c == 1.0) {
            double rho = std::hypot(smp.state.x, smp.state.y);
            pointwise_excess = std::max(pointwise_excess, k - rho / (1.0 + rho * rho));
        }
    }
    r.pass = r.measured <= r.tolerance && (c != 1.0 || pointwise_excess <= slack);
    if (c == 1.0) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "pointwise excess %.3g (limit %.3g)",
                      pointwise_excess, slack);
        r.detail = buf;
    }
    if (!r.pass && worst) r.witness = *worst;
    return r;
}

// Residual of <gamma, gamma'> kappa + (1 + |gamma|^2) kappa' along the
// samples, with kappa' by centered differences. Scales like step^2.
inline VerifyReport kappa_ode_residual(const Trajectory& traj, double tol = 1e-5) {
    detail::require_minimal_e2(traj, true, "kappa_ode_residual");
    if (traj.samples.size() < 3)
        throw std::invalid_argument("kappa_ode_residual needs >= 3 samples");

    VerifyReport r;
    r.name = "kappa_ode_residual";
    r.tolerance = tol;
    for (std::size_t i = 1; i + 1 < traj.samples.size(); ++i) {
        const auto& prev = traj.samples[i - 1];
        const auto& cur = traj.samples[i];
        const auto& next = traj.samples[i + 1];
        double kprime = (next.kappa - prev.kappa) / (next.t - prev.t);
        double radial = cur.state.x * std::cos(cur.state.theta) +
                        cur.state.y * std::sin(cur.state.theta);
        double rho_sq = cur.state.x * cur.state.x + cur.state.y * cur.state.y;
        double resid = std::abs(radial * cur.kappa + (1.0 + rho_sq) * kprime);
        if (resid > r.measured) {
            r.measured = resid;
            r.witness = cur;
        }
    }
    r.pass = r.measured <= tol;
    if (r.pass) r.witness.reset();
    return r;
}

enum class CurveType { TypeI, TypeII };

// Minimal curves in the flat chart split into lines through the origin
// (type I) and curves staying away from it (type II). Decided from the
// initial collinearity and the sampled distance to the origin.
inline CurveType classify_type(const Trajectory& traj, double tol) {
    detail::require_minimal_e2(traj, true, "classify_type");
    const CurveState& ic = traj.problem.initial;
    if (std::abs(ic.x * std::sin(ic.theta) - ic.y * std::cos(ic.theta)) <= tol)
        return CurveType::TypeI;
    for (const auto& smp : traj.samples)
        if (std::hypot(smp.state.x, smp.state.y) <= tol) return CurveType::TypeI;
    return CurveType::TypeII;
}

// Mirror symmetry of a type II run in normal form (initial state (r0, 0,
// +-pi/2) at the distance-minimizing parameter): x even, y odd, |gamma|
// minimal only at t = 0, support function even with a lone critical point
// at 0. Discrete critical points get a dead band of two steps.
inline VerifyReport symmetry_check(const Trajectory& traj) {
    detail::require_minimal_e2(traj, true, "symmetry_check");
    const CurveState& ic = traj.problem.initial;
    if (!(ic.x > 0.0) || ic.y != 0.0 || std::abs(std::cos(ic.theta)) > 1e-9)
        throw std::invalid_argument(
            "symmetry_check needs the normal form (r0, 0, +-pi/2); rotate the "
            "initial state first");
    const auto& smp = traj.samples;
    std::size_t n = smp.size();
    if (n < 5) throw std::invalid_argument("symmetry_check needs >= 5 samples");
    if (std::abs(smp.front().t + smp.back().t) > 0.5 * traj.problem.step)
        throw std::invalid_argument("symmetry_check needs a t-span symmetric about 0");

    VerifyReport r;
    r.name = "symmetry_check";
    r.tolerance = 1e-8;
    double dead_band = 2.0 * traj.problem.step;

    double even_dev = 0.0, odd_dev = 0.0, support_dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& fwd = smp[i];
        const auto& bwd = smp[n - 1 - i];
        even_dev = std::max(even_dev, std::abs(fwd.state.x - bwd.state.x));
        odd_dev = std::max(odd_dev, std::abs(fwd.state.y + bwd.state.y));
        support_dev = std::max(support_dev, std::abs(support_function(fwd.state) -
                                                     support_function(bwd.state)));
    }

    bool extrema_ok = true;
    for (std::size_t i = 1; i + 1 < n && extrema_ok; ++i) {
        double r0 = std::hypot(smp[i - 1].state.x, smp[i - 1].state.y);
        double r1 = std::hypot(smp[i].state.x, smp[i].state.y);
        double r2 = std::hypot(smp[i + 1].state.x, smp[i + 1].state.y);
        if (r1 < r0 && r1 < r2 && std::abs(smp[i].t) > dead_band) {
            extrema_ok = false;
            r.witness = smp[i];
        }
        double s0 = support_function(smp[i - 1].state);
        double s1 = support_function(smp[i].state);
        double s2 = support_function(smp[i + 1].state);
        if ((s1 - s0) * (s2 - s1) < 0.0 && std::abs(smp[i].t) > dead_band) {
            extrema_ok = false;
            r.witness = smp[i];
        }
    }

    r.measured = std::max({even_dev, odd_dev, support_dev});
    r.pass = r.measured <= r.tolerance && extrema_ok;
    char buf[128];
    std::snprintf(buf, sizeof buf, "x-even %.3g, y-odd %.3g, support-even %.3g%s",
                  even_dev, odd_dev, support_dev,
                  extrema_ok ? "" : ", stray interior extremum");
    r.detail = buf;
    return r;
}

// In e2:c with c > 1 the only constant-angle minimal lines through the
// origin are the two coordinate axes; every other direction picks up a
// nonzero slope. (At c = 1 every line through the origin is a solution,
// so the check refuses to run there.)
inline VerifyReport constant_theta_axes_check(double c) {
    if (!(c > 1.0))
        throw std::invalid_argument(
            "constant_theta_axes_check needs c > 1 (at c = 1 every line through "
            "the origin is minimal)");
    Ambient ambient = Ambient::e2tilde(c);
    const double half_pi = std::numbers::pi / 2.0;

    VerifyReport r;
    r.name = "constant_theta_axes_check";
    r.tolerance = 1e-12;
    for (int i = 0; i <= 20; ++i) {
        double t = -5.0 + 0.5 * i;
        r.measured = std::max(
            r.measured, std::abs(minimal_theta_prime(ambient, {t, 0.0, 0.0})));
        r.measured = std::max(
            r.measured, std::abs(minimal_theta_prime(ambient, {0.0, t, half_pi})));
    }

    double off_axis_min = HUGE_VAL;
    for (int k = 1; k < 360; ++k) {
        if (k == 180) continue;  // the y-axis direction
        double phi = k * std::numbers::pi / 360.0;
        CurveState s{std::cos(phi), std::sin(phi), phi};
        off_axis_min = std::min(off_axis_min, std::abs(minimal_theta_prime(ambient, s)));
    }

    r.pass = r.measured <= r.tolerance && off_axis_min > 1e-6;
    char buf[96];
    std::snprintf(buf, sizeof buf, "off-axis min slope %.3g (floor 1e-06)",
                  off_axis_min);
    r.detail = buf;
    return r;
}

// Largest delta (up to 1) such that ambients e2:c with c in [1, 1+delta)
// keep the integrated curve within eps of the flat-chart one in sup norm.
// Found by bisection on integrated runs.
inline VerifyReport continuous_dependence_check(const CurveState& ic, double t0,
                                                double t1, double eps,
                                                double step = 1e-3) {
    auto run = [&](double c) {
        OdeProblem p;
        p.ambient = Ambient::e2tilde(c);
        p.target = Target::mean(0.0);
        p.initial = ic;
        p.t0 = t0;
        p.t1 = t1;
        p.step = step;
        return integrate(p);
    };
    Trajectory base = run(1.0);
    auto sup_dist = [&](double c) {
        Trajectory other = run(c);
        double worst = 0.0;
        for (std::size_t i = 0; i < base.samples.size(); ++i) {
            double dx = other.samples[i].state.x - base.samples[i].state.x;
            double dy = other.samples[i].state.y - base.samples[i].state.y;
            worst = std::max(worst, std::hypot(dx, dy));
        }
        return worst;
    };

    VerifyReport r;
    r.name = "continuous_dependence";
    r.tolerance = eps;
    double delta;
    if (sup_dist(2.0) < eps) {
        delta = 1.0;
    } else {
        double lo = 0.0, hi = 1.0;
        for (int i = 0; i < 30; ++i) {
            double mid = 0.5 * (lo + hi);
            if (sup_dist(1.0 + mid) < eps) lo = mid;
            else hi = mid;
        }
        delta = lo;
    }
    r.measured = delta;
    r.pass = delta > 0.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "c in [1, 1+%.6g) stays within eps=%.3g", delta,
                  eps);
    r.detail = buf;
    return r;
}

// Drift of the conserved quantity along a trajectory: the Nil3 level
// (1+y^2) tan^2(theta) for minimal runs, the radial-speed invariant for
// zero-Gauss runs.
inline VerifyReport first_integral_drift(const Trajectory& traj, double tol = 1e-8) {
    const OdeProblem& p = traj.problem;
    double (*invariant)(const CurveState&) = nullptr;
    if (p.target.kind == Target::Kind::ZeroGauss) {
        invariant = &zero_k_first_integral;
    } else if (p.ambient.kind() == Kind::Nil3 &&
               p.target.kind == Target::Kind::MeanCurvature && p.target.H == 0.0) {
        invariant = &nil_first_integral;
    } else {
        throw std::invalid_argument(
            "first_integral_drift knows nil3 minimal and zero-Gauss runs only");
    }

    VerifyReport r;
    r.name = "first_integral_drift";
    r.tolerance = tol;
    double level = invariant(traj.problem.initial);
    for (const auto& smp : traj.samples) {
        double drift = std::abs(invariant(smp.state) - level);
        if (drift > r.measured) {
            r.measured = drift;
            r.witness = smp;
        }
    }
    r.pass = r.measured <= tol;
    if (r.pass) r.witness.reset();
    char buf[64];
    std::snprintf(buf, sizeof buf, "level %.12g", level);
    r.detail = buf;
    return r;
}

// Count check for detected self-crossings, used by run-spec verification.
inline VerifyReport self_intersection_count(const Trajectory& traj, int expected,
                                            double spatial_tol = 1e-9) {
    auto crossings = detect_self_intersections(traj, spatial_tol);
    VerifyReport r;
    r.name = "self_intersections";
    r.measured = static_cast<double>(crossings.size());
    r.tolerance = static_cast<double>(expected);
    r.pass = static_cast<int>(crossings.size()) == expected;
    std::string detail;
    for (const auto& c : crossings) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s(t1=%.6g, t2=%.6g, y=%.3g)",
                      detail.empty() ? "" : " ", c.t1, c.t2, c.point.y);
        detail += buf;
    }
    r.detail = detail;
    return r;
}

// Diagnostic: the sample of largest |kappa| (the apex of a type II curve).
inline const TrajectorySample& locate_apex(const Trajectory& traj) {
    if (traj.samples.empty()) throw std::invalid_argument("empty trajectory");
    const TrajectorySample* best = &traj.samples.front();
    for (const auto& smp : traj.samples)
        if (std::abs(smp.kappa) > std::abs(best->kappa)) best = &smp;
    return *best;
}

}  // namespace vertinv
