#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vertinv/ode.hpp"
#include "vertinv/surface.hpp"

namespace vertinv {

namespace detail {

inline std::string fmt(const char* spec, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace detail

// Text mesh: '#' comment lines, then "v x y z" per vertex (9 significant
// digits), then "f i j k" per triangle with 1-based indices, row-major in
// t then s. Byte deterministic for a given mesh and comment block.
inline void export_mesh(const SurfaceMesh& mesh, const std::string& path,
                        const std::vector<std::string>& comments = {}) {
    std::string out;
    for (const auto& line : comments) out += "# " + line + "\n";
    const MeshProvenance& p = mesh.provenance;
    out += "# ambient = " + p.ambient + "\n";
    out += "# source = " + p.source + "\n";
    out += "# s0 = " + detail::fmt("%.17g", p.s0) + "\n";
    out += "# s1 = " + detail::fmt("%.17g", p.s1) + "\n";
    out += "# ns = " + std::to_string(p.n_s) + "\n";
    out += "# decimate = " + std::to_string(p.decimate) + "\n";
    for (const GroupPoint& v : mesh.vertices)
        out += "v " + detail::fmt("%.9g", v.x) + " " + detail::fmt("%.9g", v.y) + " " +
               detail::fmt("%.9g", v.z) + "\n";
    char buf[64];
    for (const auto& f : mesh.faces) {
        std::snprintf(buf, sizeof buf, "f %u %u %u\n", f[0] + 1, f[1] + 1, f[2] + 1);
        out += buf;
    }
    detail::write_file(path, out);
}

struct ParsedMesh {
    std::vector<GroupPoint> vertices;
    std::vector<std::array<std::uint32_t, 3>> faces;  // zero-based
};

inline ParsedMesh parse_mesh(const std::string& path) {
    std::istringstream in(detail::read_file(path));
    ParsedMesh mesh;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == 'v') {
            GroupPoint v;
            if (std::sscanf(line.c_str(), "v %lf %lf %lf", &v.x, &v.y, &v.z) != 3)
                throw std::runtime_error("bad vertex line in " + path + ": " + line);
            mesh.vertices.push_back(v);
        } else if (line[0] == 'f') {
            unsigned i, j, k;
            if (std::sscanf(line.c_str(), "f %u %u %u", &i, &j, &k) != 3)
                throw std::runtime_error("bad face line in " + path + ": " + line);
            mesh.faces.push_back({i - 1, j - 1, k - 1});
        } else {
            throw std::runtime_error("unrecognized line in " + path + ": " + line);
        }
    }
    return mesh;
}

// Trajectory CSV: '#' comment lines, a "t,x,y,theta,kappa" header, one row
// per sample at 12 significant digits, newline terminated.
inline void export_trajectory_csv(const Trajectory& traj, const std::string& path,
                                  const std::vector<std::string>& comments = {}) {
    std::string out;
    for (const auto& line : comments) out += "# " + line + "\n";
    out += "t,x,y,theta,kappa\n";
    char buf[200];
    for (const auto& smp : traj.samples) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g\n", smp.t,
                      smp.state.x, smp.state.y, smp.state.theta, smp.kappa);
        out += buf;
    }
    detail::write_file(path, out);
}

inline std::vector<TrajectorySample> parse_trajectory_csv(const std::string& path) {
    std::istringstream in(detail::read_file(path));
    std::vector<TrajectorySample> samples;
    std::string line;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            if (line != "t,x,y,theta,kappa")
                throw std::runtime_error("unexpected CSV header in " + path + ": " + line);
            seen_header = true;
            continue;
        }
        TrajectorySample s;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &s.t, &s.state.x,
                        &s.state.y, &s.state.theta, &s.kappa) != 5)
            throw std::runtime_error("bad CSV row in " + path + ": " + line);
        samples.push_back(s);
    }
    if (!seen_header) throw std::runtime_error("missing CSV header in " + path);
    return samples;
}

}  // namespace vertinv
