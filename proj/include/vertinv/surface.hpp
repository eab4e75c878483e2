#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vertinv/ambient.hpp"
#include "vertinv/group.hpp"
#include "vertinv/ode.hpp"

namespace vertinv {

struct MeshProvenance {
    std::string ambient;
    std::string source;  // how the generating curve was produced
    double s0 = 0.0;
    double s1 = 1.0;
    std::size_t n_s = 2;
    std::size_t decimate = 1;
};

// Swept-surface mesh in chart coordinates. Vertices form an n_t x n_s grid
// stored row-major in t; vertex (i, j) is the vertical flow of the i-th
// curve node for time s_j.
struct SurfaceMesh {
    std::size_t nt = 0;
    std::size_t ns = 0;
    std::vector<GroupPoint> vertices;
    std::vector<std::array<std::uint32_t, 3>> faces;
    MeshProvenance provenance;

    const GroupPoint& vertex(std::size_t i, std::size_t j) const {
        return vertices[i * ns + j];
    }
};

// Sweeps the trajectory through the vertical flow over uniform s-nodes.
// decimate keeps every k-th trajectory node. Quads are split along the
// (i, j)-(i+1, j+1) diagonal, fixed so exports are reproducible.
inline SurfaceMesh generate_mesh(const Ambient& ambient, const Trajectory& traj,
                                 double s0, double s1, std::size_t n_s,
                                 std::size_t decimate = 1) {
    if (n_s < 2) throw std::invalid_argument("mesh needs n_s >= 2");
    if (decimate < 1) throw std::invalid_argument("decimation factor must be >= 1");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < traj.samples.size(); i += decimate) keep.push_back(i);
    if (keep.size() < 2)
        throw std::invalid_argument("trajectory too short for a mesh (need >= 2 nodes)");

    SurfaceMesh mesh;
    mesh.nt = keep.size();
    mesh.ns = n_s;
    mesh.provenance = {to_string(ambient), traj.method, s0, s1, n_s, decimate};
    mesh.vertices.reserve(mesh.nt * mesh.ns);
    double ds = (s1 - s0) / static_cast<double>(n_s - 1);
    for (std::size_t i : keep) {
        const CurveState& c = traj.samples[i].state;
        for (std::size_t j = 0; j < n_s; ++j) {
            double s = s0 + static_cast<double>(j) * ds;
            mesh.vertices.push_back(vertical_flow(ambient, s, {c.x, c.y, 0.0}));
        }
    }

    mesh.faces.reserve(2 * (mesh.nt - 1) * (mesh.ns - 1));
    auto at = [&](std::size_t i, std::size_t j) {
        return static_cast<std::uint32_t>(i * mesh.ns + j);
    };
    for (std::size_t i = 0; i + 1 < mesh.nt; ++i)
        for (std::size_t j = 0; j + 1 < mesh.ns; ++j) {
            mesh.faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
            mesh.faces.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
        }
    return mesh;
}

}  // namespace vertinv
