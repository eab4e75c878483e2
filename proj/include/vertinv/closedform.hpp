#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vertinv/fundforms.hpp"
#include "vertinv/group.hpp"
#include "vertinv/vec.hpp"

namespace vertinv {

// Antiderivative used by the Nil3 minimal generating curve:
// f(t) = (1+a)/2 * ln(t + sqrt(1+a+t^2)) + t/2 * sqrt(1+a+t^2),
// a strictly increasing bijection of the real line with f' = sqrt(1+a+t^2).
// Note f is not odd for a > 0: f(t) + f(-t) = (1+a)/2 * ln(1+a).
inline double nil_f(double a, double t) {
    if (!(a >= 0.0)) throw std::invalid_argument("nil_f requires a >= 0");
    double root = std::sqrt(1.0 + a + t * t);
    // ln(t + root) loses digits for t << 0; fold through the conjugate.
    double lg = t >= 0.0 ? std::log(t + root) : std::log1p(a) - std::log(root - t);
    return 0.5 * ((1.0 + a) * lg + t * root);
}

// Inverse of nil_f in t: safeguarded Newton (the derivative is explicit)
// inside a geometrically grown bracket, bisection fallback when a Newton
// step leaves the bracket. Accurate to 1e-12 * max(1, |v|) in residual.
inline double nil_f_inv(double a, double v) {
    if (!(a >= 0.0)) throw std::invalid_argument("nil_f_inv requires a >= 0");
    double lo = -1.0, hi = 1.0;
    for (int i = 0; i < 80 && nil_f(a, hi) < v; ++i) hi *= 2.0;
    for (int i = 0; i < 80 && nil_f(a, lo) > v; ++i) lo *= 2.0;

    double t = 0.5 * (lo + hi);
    double tol = 1e-12 * std::max(1.0, std::abs(v));
    for (int i = 0; i < 100; ++i) {
        double err = nil_f(a, t) - v;
        if (std::abs(err) <= tol) break;
        if (err > 0.0) hi = t;
        else lo = t;
        double next = t - err / std::sqrt(1.0 + a + t * t);
        t = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
    }
    return t;
}

// Level a of the conserved quantity (1+y^2) tan^2(theta), plus the two
// integration constants of the explicit solution.
struct NilParams {
    double a = 1.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

// Explicit minimal generating curve in Nil3 on the branch theta in
// (0, pi/2). Other quadrants follow by the reflection symmetries of the
// constant-line families and are not separate branches here.
inline CurveState nil_solution(const NilParams& p, double t) {
    if (!(p.a > 0.0)) throw std::invalid_argument("nil_solution requires a > 0");
    double sqrt_a = std::sqrt(p.a);
    double y = nil_f_inv(p.a, sqrt_a * t + p.c1);
    double hyp = std::sqrt(1.0 + y * y);
    double x = p.c2 + (std::asinh(y) + y * hyp) / (2.0 * sqrt_a);
    double theta = std::atan(sqrt_a / hyp);
    return {x, y, theta};
}

// The two constant-angle line families: family 1 runs parallel to the
// x-axis with theta = 0, family 2 parallel to the y-axis with theta = pi/2.
struct AxisLine {
    Vec2 base;
    int family = 1;

    CurveState at(double t) const {
        if (family == 1) return {base.x + t, base.y, 0.0};
        return {base.x, base.y + t, std::numbers::pi / 2.0};
    }
};

inline AxisLine nil_axis_line(int family, Vec2 base) {
    if (family != 1 && family != 2)
        throw std::invalid_argument("axis-line family must be 1 or 2");
    return {base, family};
}

// Conserved along minimal generating curves in Nil3.
inline double nil_first_integral(const CurveState& s) {
    if (std::cos(s.theta) == 0.0)
        throw std::domain_error("first integral has a pole at theta = pi/2 + k pi");
    double tn = std::tan(s.theta);
    return (1.0 + s.y * s.y) * tn * tn;
}

// Product of the standard Heisenberg model on R^3.
inline GroupPoint heisenberg_mul(GroupPoint p, GroupPoint q) {
    return {p.x + q.x, p.y + q.y, p.z + q.z + 0.5 * (p.x * q.y - q.x * p.y)};
}

// Coordinate change from the standard Heisenberg model into the semidirect
// chart; a group isomorphism (and isometry) onto the Nil3 ambient here.
inline GroupPoint from_heisenberg(GroupPoint p) {
    return {p.z + 0.5 * p.x * p.y, p.y, p.x};
}

// Height of the known minimal graph in the standard Heisenberg model.
inline double heisenberg_graph_height(double c, double x, double y) {
    return 0.5 * x * y - c * (0.5 * y * std::sqrt(1.0 + y * y) + 0.5 * std::asinh(y));
}

// Graph coefficient whose generating curve maps onto the explicit Nil3
// solution at conservation level a (fixed by matching the x-components).
inline double heisenberg_graph_coeff(double a) { return -1.0 / std::sqrt(a); }

// Zero-Gaussian-curvature generating curves in the flat e2:1 chart are
// given in polar form. Everything is determined by the initial state:
// a is twice the conserved quantity, and the orientation picks the sign of
// the angular speed (the arclength relation only fixes its square).
struct ZeroKParams {
    double x0 = 0.0, y0 = 0.0, theta0 = 0.0;
    double a = 0.0;
    double rho0_sq = 0.0;
    double alpha0 = 0.0;
    double orient = 1.0;

    static ZeroKParams from_initial(const CurveState& s) {
        double rho0_sq = s.x * s.x + s.y * s.y;
        if (rho0_sq == 0.0)
            throw std::invalid_argument("zero-K polar form needs (x0, y0) != (0, 0)");
        ZeroKParams p;
        p.x0 = s.x;
        p.y0 = s.y;
        p.theta0 = s.theta;
        p.a = 2.0 * (s.x * std::cos(s.theta) + s.y * std::sin(s.theta));
        p.rho0_sq = rho0_sq;
        p.alpha0 = std::atan2(s.y, s.x);
        double swirl = s.x * std::sin(s.theta) - s.y * std::cos(s.theta);
        p.orient = swirl < 0.0 ? -1.0 : 1.0;
        return p;
    }
};

// Maximal parameter interval of the polar form: a half-line bounded by the
// root of the angular-speed radicand when a != 0, the whole line otherwise.
struct ZeroKDomain {
    bool full_line = false;
    double endpoint = 0.0;
    bool unbounded_above = true;  // [endpoint, inf) vs (-inf, endpoint]

    bool contains(double t) const {
        if (full_line) return true;
        return unbounded_above ? t >= endpoint : t <= endpoint;
    }
};

inline ZeroKDomain zero_k_domain(const ZeroKParams& p) {
    if (p.a == 0.0) return {true, 0.0, true};
    return {false, p.a / 4.0 - p.rho0_sq / p.a, p.a > 0.0};
}

struct ZeroKPolar {
    double r = 0.0;
    double alpha = 0.0;
};

namespace detail {

inline double zero_k_g(const ZeroKParams& p, double t) {
    double radicand = -p.a * p.a + 4.0 * p.a * t + 4.0 * p.rho0_sq;
    return std::sqrt(std::max(0.0, radicand));
}

// Antiderivative of the angular speed g / (2(a t + rho0^2)) for a != 0;
// the arccot branch is (0, pi), continuous across g -> 0.
inline double zero_k_angle_primitive(const ZeroKParams& p, double t) {
    double g = zero_k_g(p, t);
    return (g - p.a * std::atan2(1.0, p.a / g)) / p.a;
}

}  // namespace detail

// Angular speed alpha'(t) of the polar form (signed by orientation).
inline double zero_k_alpha_prime(const ZeroKParams& p, double t) {
    if (p.a == 0.0) return p.orient / std::sqrt(p.rho0_sq);
    return p.orient * detail::zero_k_g(p, t) / (2.0 * (p.a * t + p.rho0_sq));
}

inline ZeroKPolar zero_k_solution(const ZeroKParams& p, double t) {
    if (!zero_k_domain(p).contains(t))
        throw std::domain_error("t outside the maximal zero-K domain");
    if (p.a == 0.0) {
        double r = std::sqrt(p.rho0_sq);
        return {r, p.alpha0 + p.orient * t / r};
    }
    double r = std::sqrt(std::max(0.0, p.a * t + p.rho0_sq));
    double swept = detail::zero_k_angle_primitive(p, t) -
                   detail::zero_k_angle_primitive(p, 0.0);
    return {r, p.alpha0 + p.orient * swept};
}

inline Vec2 zero_k_point(const ZeroKParams& p, double t) {
    ZeroKPolar polar = zero_k_solution(p, t);
    return {polar.r * std::cos(polar.alpha), polar.r * std::sin(polar.alpha)};
}

// Conserved along zero-Gauss trajectories; equals half the growth rate of
// |gamma|^2.
inline double zero_k_first_integral(const CurveState& s) {
    return s.x * std::cos(s.theta) + s.y * std::sin(s.theta);
}

}  // namespace vertinv
