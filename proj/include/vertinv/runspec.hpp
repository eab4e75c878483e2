#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vertinv/ambient.hpp"
#include "vertinv/ode.hpp"

namespace vertinv {

// Reproducibility-oriented description of one run: ambient, curvature
// target, initial state, spans, outputs, and the verifier selection with
// its tolerances. Parses from a flat "key = value" text file; unknown keys
// are rejected rather than ignored so typos cannot silently change a run.
struct RunSpec {
    std::string ambient = "euclid";
    bool zero_gauss = false;
    double H = 0.0;
    CurveState ic;
    double t0 = 0.0;
    double t1 = 1.0;
    double step = 1e-3;
    std::string method = "rk4";  // "rk4" or "closed"

    double s0 = 0.0;
    double s1 = 1.0;
    std::size_t ns = 2;
    std::size_t decimate = 1;

    std::string csv_out;
    std::string mesh_out;
    std::string report_out;

    std::vector<std::string> verifiers;
    std::optional<int> expect_self_intersections;

    double tol_kappa_residual = 1e-5;
    double tol_first_integral = 1e-8;
    double tol_classify = 1e-9;
    double tol_continuous_eps = 1e-2;
    double spatial_tol = 1e-9;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("run-spec key " + key + ": bad number '" + value +
                                    "'");
    }
    if (used != value.size())
        throw std::invalid_argument("run-spec key " + key + ": bad number '" + value +
                                    "'");
    return v;
}

inline std::size_t parse_size(const std::string& key, const std::string& value) {
    double v = parse_double(key, value);
    if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v)))
        throw std::invalid_argument("run-spec key " + key + ": expected a whole number");
    return static_cast<std::size_t>(v);
}

inline CurveState parse_state(const std::string& key, const std::string& value) {
    CurveState s;
    char tail = '\0';
    int got = std::sscanf(value.c_str(), "%lf,%lf,%lf%c", &s.x, &s.y, &s.theta, &tail);
    if (got != 3)
        throw std::invalid_argument("run-spec key " + key +
                                    ": expected 'x,y,theta', got '" + value + "'");
    return s;
}

inline std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace detail

inline RunSpec parse_runspec(const std::string& text) {
    RunSpec spec;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::trim(line);
        if (body.empty() || body[0] == '#') continue;
        std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("run-spec line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        std::string key = detail::trim(body.substr(0, eq));
        std::string value = detail::trim(body.substr(eq + 1));

        if (key == "ambient") {
            parse_ambient(value);  // reject bad names early
            spec.ambient = value;
        } else if (key == "target") {
            if (value == "K0") {
                spec.zero_gauss = true;
                spec.H = 0.0;
            } else {
                spec.zero_gauss = false;
                spec.H = detail::parse_double(key, value);
            }
        } else if (key == "ic") {
            spec.ic = detail::parse_state(key, value);
        } else if (key == "t0") {
            spec.t0 = detail::parse_double(key, value);
        } else if (key == "t1") {
            spec.t1 = detail::parse_double(key, value);
        } else if (key == "step") {
            spec.step = detail::parse_double(key, value);
        } else if (key == "method") {
            if (value != "rk4" && value != "closed")
                throw std::invalid_argument("run-spec method must be rk4 or closed");
            spec.method = value;
        } else if (key == "s0") {
            spec.s0 = detail::parse_double(key, value);
        } else if (key == "s1") {
            spec.s1 = detail::parse_double(key, value);
        } else if (key == "ns") {
            spec.ns = detail::parse_size(key, value);
        } else if (key == "decimate") {
            spec.decimate = detail::parse_size(key, value);
        } else if (key == "csv_out") {
            spec.csv_out = value;
        } else if (key == "mesh_out") {
            spec.mesh_out = value;
        } else if (key == "report_out") {
            spec.report_out = value;
        } else if (key == "verifiers") {
            spec.verifiers = detail::split_list(value);
        } else if (key == "expect_self_intersections") {
            spec.expect_self_intersections =
                static_cast<int>(detail::parse_size(key, value));
        } else if (key == "tol_kappa_residual") {
            spec.tol_kappa_residual = detail::parse_double(key, value);
        } else if (key == "tol_first_integral") {
            spec.tol_first_integral = detail::parse_double(key, value);
        } else if (key == "tol_classify") {
            spec.tol_classify = detail::parse_double(key, value);
        } else if (key == "tol_continuous_eps") {
            spec.tol_continuous_eps = detail::parse_double(key, value);
        } else if (key == "spatial_tol") {
            spec.spatial_tol = detail::parse_double(key, value);
        } else {
            throw std::invalid_argument("unknown run-spec key: " + key);
        }
    }
    return spec;
}

// Canonical resolved form: every key materialized, fixed order, full
// precision. Identical RunSpec values serialize to identical bytes, which
// is what makes output headers a reproducibility record.
inline std::string serialize_runspec(const RunSpec& spec) {
    std::string out;
    char buf[160];
    auto put = [&](const char* key, const std::string& value) {
        out += std::string(key) + " = " + value + "\n";
    };
    auto put_g = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        put(key, buf);
    };
    put("ambient", spec.ambient);
    if (spec.zero_gauss) {
        put("target", "K0");
    } else {
        put_g("target", spec.H);
    }
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", spec.ic.x, spec.ic.y,
                  spec.ic.theta);
    put("ic", buf);
    put_g("t0", spec.t0);
    put_g("t1", spec.t1);
    put_g("step", spec.step);
    put("method", spec.method);
    put_g("s0", spec.s0);
    put_g("s1", spec.s1);
    put("ns", std::to_string(spec.ns));
    put("decimate", std::to_string(spec.decimate));
    if (!spec.csv_out.empty()) put("csv_out", spec.csv_out);
    if (!spec.mesh_out.empty()) put("mesh_out", spec.mesh_out);
    if (!spec.report_out.empty()) put("report_out", spec.report_out);
    if (!spec.verifiers.empty()) {
        std::string joined;
        for (const auto& v : spec.verifiers) {
            if (!joined.empty()) joined += ",";
            joined += v;
        }
        put("verifiers", joined);
    }
    if (spec.expect_self_intersections)
        put("expect_self_intersections", std::to_string(*spec.expect_self_intersections));
    put_g("tol_kappa_residual", spec.tol_kappa_residual);
    put_g("tol_first_integral", spec.tol_first_integral);
    put_g("tol_classify", spec.tol_classify);
    put_g("tol_continuous_eps", spec.tol_continuous_eps);
    put_g("spatial_tol", spec.spatial_tol);
    return out;
}

inline OdeProblem to_problem(const RunSpec& spec) {
    OdeProblem p;
    p.ambient = parse_ambient(spec.ambient);
    p.target = spec.zero_gauss ? Target::zero_gauss() : Target::mean(spec.H);
    p.initial = spec.ic;
    p.t0 = spec.t0;
    p.t1 = spec.t1;
    p.step = spec.step;
    return p;
}

// Serialized spec split into lines, for embedding as output file comments.
inline std::vector<std::string> runspec_comment_lines(const RunSpec& spec) {
    std::vector<std::string> lines;
    std::istringstream in(serialize_runspec(spec));
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace vertinv
