#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "vertinv/ambient.hpp"
#include "vertinv/vec.hpp"

namespace vertinv {

// State of an arclength-parametrized generating curve in the z = 0 plane:
// position and tangent angle. theta is kept unwrapped so trajectories can
// report winding; all evaluations below are wrap-agnostic.
struct CurveState {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
};

// delta = a x + b y, eps = c x + d y: plane part of the right-invariant
// vertical field along the curve, and the sole way the position enters the
// curvature formulas.
inline std::pair<double, double> delta_eps(const Ambient& ambient, const CurveState& s) {
    const GroupMatrix& m = ambient.matrix();
    return {m.a * s.x + m.b * s.y, m.c * s.x + m.d * s.y};
}

struct FirstForm {
    double E = 1.0, F = 0.0, G = 1.0;
};

// E = 1 exactly (arclength in t); F and G come from the vertical field.
inline FirstForm first_form(const Ambient& ambient, const CurveState& s) {
    auto [delta, eps] = delta_eps(ambient, s);
    return {1.0, delta * std::cos(s.theta) + eps * std::sin(s.theta),
            1.0 + delta * delta + eps * eps};
}

struct SecondForm {
    double e = 0.0, f = 0.0, g = 0.0;
};

// Only e depends on theta'; f and g are functions of the state alone.
inline SecondForm second_form(const Ambient& ambient, const CurveState& s,
                              double theta_prime) {
    const GroupMatrix& m = ambient.matrix();
    auto [delta, eps] = delta_eps(ambient, s);
    double ct = std::cos(s.theta), st = std::sin(s.theta);
    double c2t = std::cos(2.0 * s.theta), s2t = std::sin(2.0 * s.theta);
    double slope = delta * st - eps * ct;
    double root = std::sqrt(1.0 + slope * slope);

    double e = (slope * (-(m.a - m.d) * c2t - m.a - (m.b + m.c) * s2t - m.d) -
                2.0 * theta_prime) /
               (2.0 * root);
    double f = (-slope * (ct * (2.0 * m.a * delta + (m.b + m.c) * eps) +
                          st * ((m.b + m.c) * delta + 2.0 * m.d * eps)) +
                m.b - m.c) /
               (2.0 * root);
    double g = (ct * (m.a * delta * delta * eps + delta * ((m.b + m.c) * eps * eps + m.b) +
                      m.d * eps * (eps * eps + 1.0)) -
                st * (delta * (m.a * delta * delta + m.a + (m.b + m.c) * delta * eps +
                               m.d * eps * eps) +
                      m.c * eps)) /
               root;
    return {e, f, g};
}

// Unit normal of the swept surface in frame components, oriented by
// Phi_t x Phi_s.
inline Vec3 unit_normal(const Ambient& ambient, const CurveState& s) {
    auto [delta, eps] = delta_eps(ambient, s);
    double ct = std::cos(s.theta), st = std::sin(s.theta);
    double tilt = eps * ct - delta * st;
    double root = std::sqrt(1.0 + tilt * tilt);
    return {st / root, -ct / root, tilt / root};
}

struct FundForms {
    double E, F, G;
    double e, f, g;
    Vec3 normal;
};

inline FundForms fund_forms(const Ambient& ambient, const CurveState& s,
                            double theta_prime) {
    FirstForm i = first_form(ambient, s);
    SecondForm ii = second_form(ambient, s, theta_prime);
    return {i.E, i.F, i.G, ii.e, ii.f, ii.g, unit_normal(ambient, s)};
}

inline double mean_curvature(const Ambient& ambient, const CurveState& s,
                             double theta_prime) {
    FirstForm i = first_form(ambient, s);
    SecondForm ii = second_form(ambient, s, theta_prime);
    double area2 = i.E * i.G - i.F * i.F;
    if (!(area2 > 0.0))
        throw std::domain_error("degenerate first fundamental form");
    return (i.E * ii.g - 2.0 * i.F * ii.f + ii.e * i.G) / (2.0 * area2);
}

inline double gaussian_curvature(const Ambient& ambient, const CurveState& s,
                                 double theta_prime) {
    FirstForm i = first_form(ambient, s);
    SecondForm ii = second_form(ambient, s, theta_prime);
    double area2 = i.E * i.G - i.F * i.F;
    if (!(area2 > 0.0))
        throw std::domain_error("degenerate first fundamental form");
    return (ii.e * ii.g - ii.f * ii.f) / area2;
}

// The prescribed-mean-curvature equation is affine in theta' with slope
// coefficient -4(1 + delta^2 + eps^2), which never vanishes, so the solve
// is a closed-form division. Kept independent of second_form so the two
// paths cross-check each other.
inline double theta_prime_for_H(const Ambient& ambient, const CurveState& s, double H) {
    const GroupMatrix& m = ambient.matrix();
    auto [delta, eps] = delta_eps(ambient, s);
    double ct = std::cos(s.theta), st = std::sin(s.theta);
    double c3t = std::cos(3.0 * s.theta), s3t = std::sin(3.0 * s.theta);
    double tr = m.a + m.d;
    double d2 = delta * delta, e2 = eps * eps;

    double poly =
        -st * (delta * (3.0 * tr * (d2 + e2) + 5.0 * m.a + 3.0 * m.d) +
               (3.0 * m.b - m.c) * eps) +
        s3t * (delta * (tr * (d2 - 3.0 * e2) - m.a + m.d) + (m.b + m.c) * eps) +
        ct * (eps * (3.0 * tr * d2 + 3.0 * m.a + 5.0 * m.d) - (m.b - 3.0 * m.c) * delta +
              3.0 * tr * e2 * eps) +
        c3t * (-eps * (3.0 * tr * d2 - m.a + m.d) + (m.b + m.c) * delta + tr * e2 * eps);

    double tilt = eps * ct - delta * st;
    double w = 1.0 + tilt * tilt;
    return (poly - 8.0 * w * std::sqrt(w) * H) / (4.0 * (1.0 + d2 + e2));
}

}  // namespace vertinv
