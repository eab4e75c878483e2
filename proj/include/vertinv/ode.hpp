#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "vertinv/ambient.hpp"
#include "vertinv/fundforms.hpp"

namespace vertinv {

// Curvature target for the generating curve: prescribed mean curvature of
// the swept surface, or vanishing Gaussian curvature (the latter only makes
// sense in the flat E2tilde chart, where the slope has a closed form).
struct Target {
    enum class Kind { MeanCurvature, ZeroGauss };
    Kind kind = Kind::MeanCurvature;
    double H = 0.0;

    static Target mean(double H) { return {Kind::MeanCurvature, H}; }
    static Target zero_gauss() { return {Kind::ZeroGauss, 0.0}; }
};

struct OdeProblem {
    Ambient ambient = Ambient::euclid();
    Target target;
    CurveState initial;
    double t0 = 0.0;
    double t1 = 1.0;
    double step = 1e-3;
    // Abort radius around the zero-Gauss blow-up locus y cos(theta) =
    // x sin(theta), where the slope is unbounded.
    double singular_guard = 1e-8;
};

// Thrown when a zero-Gauss evaluation lands inside the guard band; carries
// the offending state so callers can report or shrink the span.
class singularity_error : public std::runtime_error {
  public:
    singularity_error(CurveState s, double t)
        : std::runtime_error(format(s, t)), state_(s), t_(t) {}

    const CurveState& state() const { return state_; }
    double t() const { return t_; }

  private:
    static std::string format(const CurveState& s, double t) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "zero-Gauss slope singular near t = %.6g at state (%.12g, %.12g, "
                      "%.12g)",
                      t, s.x, s.y, s.theta);
        return buf;
    }

    CurveState state_;
    double t_;
};

// Minimal-surface slope theta' in closed form per canonical family. These
// are the specialized right-hand sides; the general path solves the affine
// mean-curvature equation instead, and the two must agree to rounding.
inline double minimal_theta_prime(const Ambient& ambient, const CurveState& s) {
    double c = ambient.param();
    double ct = std::cos(s.theta), st = std::sin(s.theta);
    switch (ambient.kind()) {
        case Kind::Euclid:
            return 0.0;
        case Kind::Sol3: {
            double c2 = c * c;
            double fold = (1.0 + c2) * std::cos(2.0 * s.theta) + 1.0 - c2;
            return fold * (c2 * s.y * ct + s.x * st) /
                   (2.0 * (c2 + s.x * s.x + c2 * c2 * s.y * s.y));
        }
        case Kind::Nil3:
            return -s.y * ct * st * st / (1.0 + s.y * s.y);
        case Kind::E2tilde: {
            double c2 = c * c;
            double fold = 1.0 + c2 + (1.0 - c2) * std::cos(2.0 * s.theta);
            return fold * (s.x * st - c2 * s.y * ct) /
                   (2.0 * (c2 + s.x * s.x + c2 * c2 * s.y * s.y));
        }
        case Kind::Custom:
            return theta_prime_for_H(ambient, s, 0.0);
    }
    return 0.0;
}

inline double zero_gauss_theta_prime(const CurveState& s, double guard, double t) {
    double denom = s.y * std::cos(s.theta) - s.x * std::sin(s.theta);
    if (std::abs(denom) < guard) throw singularity_error(s, t);
    return -1.0 / denom;
}

// Slope of the tangent angle for the problem's target; t is only used to
// label singularity errors.
inline double theta_prime_rhs(const OdeProblem& p, const CurveState& s, double t) {
    if (p.target.kind == Target::Kind::ZeroGauss)
        return zero_gauss_theta_prime(s, p.singular_guard, t);
    if (p.target.H == 0.0) return minimal_theta_prime(p.ambient, s);
    return theta_prime_for_H(p.ambient, s, p.target.H);
}

// (x', y', theta') of the generating-curve system.
inline std::array<double, 3> curve_rhs(const OdeProblem& p, const CurveState& s,
                                       double t) {
    return {std::cos(s.theta), std::sin(s.theta), theta_prime_rhs(p, s, t)};
}

struct TrajectorySample {
    double t = 0.0;
    CurveState state;
    double kappa = 0.0;  // theta' at the node; the curve's signed curvature
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    OdeProblem problem;
    std::string method = "rk4";
};

namespace detail {

// Number of whole steps covering `span`, tolerant of spans that are an
// integer multiple of the step up to rounding.
inline long grid_count(double span, double step) {
    double q = span / step;
    double r = std::llround(q);
    if (std::abs(q - r) < 1e-9 * std::max(1.0, std::abs(q))) return static_cast<long>(r);
    return static_cast<long>(std::floor(q));
}

inline CurveState rk4_step(const OdeProblem& p, const CurveState& s, double t, double h) {
    auto k1 = curve_rhs(p, s, t);
    CurveState s2{s.x + 0.5 * h * k1[0], s.y + 0.5 * h * k1[1], s.theta + 0.5 * h * k1[2]};
    auto k2 = curve_rhs(p, s2, t);
    CurveState s3{s.x + 0.5 * h * k2[0], s.y + 0.5 * h * k2[1], s.theta + 0.5 * h * k2[2]};
    auto k3 = curve_rhs(p, s3, t);
    CurveState s4{s.x + h * k3[0], s.y + h * k3[1], s.theta + h * k3[2]};
    auto k4 = curve_rhs(p, s4, t);
    return {s.x + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            s.y + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
            s.theta + h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2])};
}

}  // namespace detail

// Classical fixed-step RK4 over the span, both directions from the initial
// state anchored at t = 0. The span must contain 0; the backward leg runs
// with negated step. Node times are k*step products, not accumulated sums,
// so grids are symmetric and reruns are bit-identical.
inline Trajectory integrate(const OdeProblem& p) {
    if (!(p.step > 0.0)) throw std::invalid_argument("step must be positive");
    if (p.target.kind == Target::Kind::ZeroGauss &&
        !(p.ambient.kind() == Kind::E2tilde && p.ambient.param() == 1.0))
        throw std::invalid_argument("zero-Gauss target requires the e2:1 ambient");
    double lo = std::min(p.t0, p.t1), hi = std::max(p.t0, p.t1);
    if (!(lo <= 0.0 && 0.0 <= hi))
        throw std::invalid_argument("t-span must contain 0 (the initial-state anchor)");

    long n_neg = detail::grid_count(-lo, p.step);
    long n_pos = detail::grid_count(hi, p.step);

    Trajectory out;
    out.problem = p;
    out.samples.resize(static_cast<std::size_t>(n_neg + n_pos) + 1);

    auto emit = [&](long k, const CurveState& s) {
        double t = static_cast<double>(k) * p.step;
        out.samples[static_cast<std::size_t>(k + n_neg)] = {t, s,
                                                            theta_prime_rhs(p, s, t)};
    };

    CurveState s = p.initial;
    emit(0, s);
    for (long k = 1; k <= n_pos; ++k) {
        s = detail::rk4_step(p, s, static_cast<double>(k - 1) * p.step, p.step);
        emit(k, s);
    }
    s = p.initial;
    for (long k = 1; k <= n_neg; ++k) {
        s = detail::rk4_step(p, s, -static_cast<double>(k - 1) * p.step, -p.step);
        emit(-k, s);
    }

    if (p.t0 > p.t1) std::reverse(out.samples.begin(), out.samples.end());
    return out;
}

}  // namespace vertinv
