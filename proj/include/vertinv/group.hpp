#pragma once

#include <array>
#include <cmath>
#include <cstdlib>

#include "vertinv/ambient.hpp"
#include "vertinv/vec.hpp"

namespace vertinv {

struct GroupPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Entries of e^{zA}. Columns are the plane parts of the left-invariant
// frame fields E1, E2 at height z.
struct FrameCoeffs {
    double a11 = 1.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 1.0;

    Vec2 apply(Vec2 v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
};

inline FrameCoeffs operator*(const FrameCoeffs& l, const FrameCoeffs& r) {
    return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
            l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
}

namespace detail {

// Truncated Taylor series after scaling zA down to norm <= 1/2, then
// squaring back up. Adequate for any finite matrix; the canonical kinds
// never take this path.
inline FrameCoeffs exp_series(GroupMatrix m, double z) {
    double sa = z * m.a, sb = z * m.b, sc = z * m.c, sd = z * m.d;
    double norm = std::max(std::abs(sa) + std::abs(sb), std::abs(sc) + std::abs(sd));
    int squarings = 0;
    while (norm > 0.5) {
        sa *= 0.5; sb *= 0.5; sc *= 0.5; sd *= 0.5;
        norm *= 0.5;
        ++squarings;
    }
    FrameCoeffs sum;  // identity
    FrameCoeffs term;
    for (int n = 1; n <= 24; ++n) {
        double ta = term.a11, tb = term.a12, tc = term.a21, td = term.a22;
        term.a11 = (ta * sa + tb * sc) / n;
        term.a12 = (ta * sb + tb * sd) / n;
        term.a21 = (tc * sa + td * sc) / n;
        term.a22 = (tc * sb + td * sd) / n;
        sum.a11 += term.a11; sum.a12 += term.a12;
        sum.a21 += term.a21; sum.a22 += term.a22;
        double tn = std::abs(term.a11) + std::abs(term.a12) + std::abs(term.a21) +
                    std::abs(term.a22);
        if (tn < 1e-19) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

}  // namespace detail

// e^{zA} in closed form per canonical kind: A^2 = I for the Sol3 matrix
// (hyperbolic rotation), A^2 = -I for the E2tilde matrix (elliptic
// rotation), A^2 = 0 for Nil3.
inline FrameCoeffs exp_zA(const Ambient& ambient, double z) {
    double c = ambient.param();
    switch (ambient.kind()) {
        case Kind::Euclid:
            return {};
        case Kind::Sol3:
            return {std::cosh(z), c * std::sinh(z), std::sinh(z) / c, std::cosh(z)};
        case Kind::Nil3:
            return {1.0, z, 0.0, 1.0};
        case Kind::E2tilde:
            return {std::cos(z), -c * std::sin(z), std::sin(z) / c, std::cos(z)};
        case Kind::Custom:
            return detail::exp_series(ambient.matrix(), z);
    }
    std::abort();
}

// (p1, z1) * (p2, z2) = (p1 + e^{z1 A} p2, z1 + z2).
inline GroupPoint group_mul(const Ambient& ambient, GroupPoint p1, GroupPoint p2) {
    Vec2 twisted = exp_zA(ambient, p1.z).apply({p2.x, p2.y});
    return {p1.x + twisted.x, p1.y + twisted.y, p1.z + p2.z};
}

// Left translation by (0, 0, s): the one-parameter flow that sweeps a
// generating curve into a vertically invariant surface.
inline GroupPoint vertical_flow(const Ambient& ambient, double s, GroupPoint p) {
    Vec2 twisted = exp_zA(ambient, s).apply({p.x, p.y});
    return {twisted.x, twisted.y, p.z + s};
}

struct Frame {
    Vec3 e1, e2, e3;  // coordinate components in the d/dx, d/dy, d/dz basis
};

inline Frame frame_fields(const Ambient& ambient, GroupPoint p) {
    FrameCoeffs m = exp_zA(ambient, p.z);
    return {{m.a11, m.a21, 0.0}, {m.a12, m.a22, 0.0}, {0.0, 0.0, 1.0}};
}

// Metric components in coordinates: the coframe dual to E1, E2, E3 is
// built from e^{-zA}, so the metric only depends on z.
inline std::array<std::array<double, 3>, 3> metric_at(const Ambient& ambient, GroupPoint p) {
    FrameCoeffs m = exp_zA(ambient, -p.z);
    double gxx = m.a11 * m.a11 + m.a21 * m.a21;
    double gxy = m.a11 * m.a12 + m.a21 * m.a22;
    double gyy = m.a12 * m.a12 + m.a22 * m.a22;
    return {{{gxx, gxy, 0.0}, {gxy, gyy, 0.0}, {0.0, 0.0, 1.0}}};
}

// Levi-Civita connection on the orthonormal frame; entry [i][j] holds the
// frame components of the derivative of Ej along Ei. Constant over the
// group, so a function of the structure matrix alone.
struct ConnectionTable {
    std::array<std::array<Vec3, 3>, 3> nabla;
};

inline ConnectionTable connection_table(const Ambient& ambient) {
    const GroupMatrix& m = ambient.matrix();
    double sym = 0.5 * (m.b + m.c);
    double skew = 0.5 * (m.b - m.c);
    ConnectionTable t;
    t.nabla[0][0] = {0.0, 0.0, m.a};
    t.nabla[0][1] = {0.0, 0.0, sym};
    t.nabla[0][2] = {-m.a, -sym, 0.0};
    t.nabla[1][0] = {0.0, 0.0, sym};
    t.nabla[1][1] = {0.0, 0.0, m.d};
    t.nabla[1][2] = {-sym, -m.d, 0.0};
    t.nabla[2][0] = {0.0, -skew, 0.0};
    t.nabla[2][1] = {skew, 0.0, 0.0};
    t.nabla[2][2] = {0.0, 0.0, 0.0};
    return t;
}

// Right-invariant field extending d/dz, in frame components. Its plane
// part grows linearly in (x, y); this is what makes the swept surfaces
// genuinely curved.
inline Vec3 right_field_F3(const Ambient& ambient, GroupPoint p) {
    const GroupMatrix& m = ambient.matrix();
    double delta = m.a * p.x + m.b * p.y;
    double eps = m.c * p.x + m.d * p.y;
    FrameCoeffs inv = exp_zA(ambient, -p.z);
    return {inv.a11 * delta + inv.a12 * eps, inv.a21 * delta + inv.a22 * eps, 1.0};
}

}  // namespace vertinv
