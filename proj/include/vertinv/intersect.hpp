#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "vertinv/ode.hpp"
#include "vertinv/vec.hpp"

namespace vertinv {

// A transversal self-crossing of the planar generating curve, reported with
// the two curve parameters (t1 < t2) and the crossing point.
struct Crossing {
    double t1 = 0.0;
    double t2 = 0.0;
    Vec2 point;
};

namespace detail {

inline std::uint64_t cell_key(long ix, long iy) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) << 32) |
           static_cast<std::uint32_t>(iy);
}

// Bisection of the crossing parameter on segment a0-a1 against the side of
// the supporting line of b0-b1, down to `tol` in arc length.
inline double bisect_crossing(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double tol) {
    Vec2 dir = b1 - b0;
    double lo = 0.0, hi = 1.0;
    double side_lo = cross(dir, a0 - b0);
    double len = norm(a1 - a0);
    for (int it = 0; it < 64 && (hi - lo) * len > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double side_mid = cross(dir, a0 + (a1 - a0) * mid - b0);
        if ((side_lo < 0.0) == (side_mid < 0.0)) {
            lo = mid;
            side_lo = side_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// All transversal crossings of the trajectory's polyline with itself.
// Segments are bucketed on a uniform grid with cell size equal to the
// longest segment, so two crossing segments always share a cell; candidate
// pairs are then resolved exactly and refined by bisection to spatial_tol.
// Pairs of index-adjacent segments are excluded (they share an endpoint).
inline std::vector<Crossing> detect_self_intersections(const Trajectory& traj,
                                                       double spatial_tol = 1e-9) {
    const auto& samples = traj.samples;
    if (samples.size() < 2) throw std::invalid_argument("trajectory needs >= 2 samples");
    std::size_t nseg = samples.size() - 1;

    auto point = [&](std::size_t i) -> Vec2 {
        return {samples[i].state.x, samples[i].state.y};
    };

    double cell = 0.0;
    for (std::size_t i = 0; i < nseg; ++i)
        cell = std::max(cell, norm(point(i + 1) - point(i)));
    if (cell == 0.0) return {};

    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
    entries.reserve(2 * nseg);
    for (std::size_t i = 0; i < nseg; ++i) {
        Vec2 p = point(i), q = point(i + 1);
        long x0 = static_cast<long>(std::floor(std::min(p.x, q.x) / cell));
        long x1 = static_cast<long>(std::floor(std::max(p.x, q.x) / cell));
        long y0 = static_cast<long>(std::floor(std::min(p.y, q.y) / cell));
        long y1 = static_cast<long>(std::floor(std::max(p.y, q.y) / cell));
        for (long ix = x0; ix <= x1; ++ix)
            for (long iy = y0; iy <= y1; ++iy)
                entries.emplace_back(detail::cell_key(ix, iy),
                                     static_cast<std::uint32_t>(i));
    }
    std::sort(entries.begin(), entries.end());

    std::vector<std::uint64_t> candidates;
    for (std::size_t lo = 0; lo < entries.size();) {
        std::size_t hi = lo;
        while (hi < entries.size() && entries[hi].first == entries[lo].first) ++hi;
        for (std::size_t u = lo; u < hi; ++u)
            for (std::size_t v = u + 1; v < hi; ++v) {
                std::uint32_t i = entries[u].second, j = entries[v].second;
                if (i > j) std::swap(i, j);
                if (j - i <= 1) continue;
                candidates.push_back((static_cast<std::uint64_t>(i) << 32) | j);
            }
        lo = hi;
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Crossing> out;
    for (std::uint64_t key : candidates) {
        std::size_t i = key >> 32, j = key & 0xffffffffu;
        Vec2 a0 = point(i), a1 = point(i + 1);
        Vec2 b0 = point(j), b1 = point(j + 1);
        double d1 = cross(b1 - b0, a0 - b0);
        double d2 = cross(b1 - b0, a1 - b0);
        double d3 = cross(a1 - a0, b0 - a0);
        double d4 = cross(a1 - a0, b1 - a0);
        if (!(d1 * d2 < 0.0 && d3 * d4 < 0.0)) continue;

        double u = detail::bisect_crossing(a0, a1, b0, b1, spatial_tol);
        double v = detail::bisect_crossing(b0, b1, a0, a1, spatial_tol);
        Vec2 pu = a0 + (a1 - a0) * u;
        Vec2 pv = b0 + (b1 - b0) * v;

        double t1 = samples[i].t + u * (samples[i + 1].t - samples[i].t);
        double t2 = samples[j].t + v * (samples[j + 1].t - samples[j].t);
        Crossing c{t1, t2, (pu + pv) * 0.5};
        if (c.t1 > c.t2) std::swap(c.t1, c.t2);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Crossing& l, const Crossing& r) {
        return l.t1 < r.t1 || (l.t1 == r.t1 && l.t2 < r.t2);
    });
    return out;
}

}  // namespace vertinv
