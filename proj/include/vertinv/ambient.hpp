#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace vertinv {

// Structure matrix A of the semidirect product R^2 x| R. The group law
// twists the plane factor by e^{zA}; everything downstream (frame, metric,
// curvature formulas) is a function of these four entries.
struct GroupMatrix {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

enum class Kind { Euclid, Sol3, Nil3, E2tilde, Custom };

// Ambient space: one of the canonical unimodular families (Euclidean space,
// Sol3, Nil3, the universal cover of E(2)) or an arbitrary matrix. The
// canonical families are normalized so the remaining freedom is a single
// parameter c in [1, inf).
class Ambient {
  public:
    static Ambient euclid() { return Ambient(Kind::Euclid, 1.0, {}); }

    static Ambient sol3(double c = 1.0) {
        require_param(c);
        return Ambient(Kind::Sol3, c, {0.0, c, 1.0 / c, 0.0});
    }

    static Ambient nil3() { return Ambient(Kind::Nil3, 1.0, {0.0, 1.0, 0.0, 0.0}); }

    static Ambient e2tilde(double c = 1.0) {
        require_param(c);
        return Ambient(Kind::E2tilde, c, {0.0, -c, 1.0 / c, 0.0});
    }

    static Ambient custom(GroupMatrix m) { return Ambient(Kind::Custom, 1.0, m); }

    Kind kind() const { return kind_; }
    double param() const { return param_; }
    const GroupMatrix& matrix() const { return m_; }

    // True when the structure matrix vanishes, i.e. the group is abelian.
    bool flat_plane_action() const {
        return m_.a == 0.0 && m_.b == 0.0 && m_.c == 0.0 && m_.d == 0.0;
    }

  private:
    Ambient(Kind k, double p, GroupMatrix m) : kind_(k), param_(p), m_(m) {}

    static void require_param(double c) {
        if (!(c >= 1.0))
            throw std::invalid_argument("ambient parameter must satisfy c >= 1");
    }

    Kind kind_;
    double param_;
    GroupMatrix m_;
};

// Accepts "euclid", "nil3", "sol3", "e2", the latter two optionally with a
// ":c" suffix (defaults to 1).
inline Ambient parse_ambient(const std::string& text) {
    std::string name = text;
    double c = 1.0;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        std::string tail = text.substr(colon + 1);
        std::size_t used = 0;
        try {
            c = std::stod(tail, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad ambient parameter: " + text);
        }
        if (used != tail.size())
            throw std::invalid_argument("bad ambient parameter: " + text);
    }
    if (name == "euclid" && colon == std::string::npos) return Ambient::euclid();
    if (name == "nil3" && colon == std::string::npos) return Ambient::nil3();
    if (name == "sol3") return Ambient::sol3(c);
    if (name == "e2") return Ambient::e2tilde(c);
    throw std::invalid_argument("unknown ambient: " + text);
}

inline std::string to_string(const Ambient& ambient) {
    char buf[128];
    switch (ambient.kind()) {
        case Kind::Euclid: return "euclid";
        case Kind::Nil3: return "nil3";
        case Kind::Sol3:
            std::snprintf(buf, sizeof buf, "sol3:%.17g", ambient.param());
            return buf;
        case Kind::E2tilde:
            std::snprintf(buf, sizeof buf, "e2:%.17g", ambient.param());
            return buf;
        case Kind::Custom: {
            const GroupMatrix& m = ambient.matrix();
            std::snprintf(buf, sizeof buf, "custom[%.17g,%.17g;%.17g,%.17g]", m.a, m.b, m.c,
                          m.d);
            return buf;
        }
    }
    return "?";
}

}  // namespace vertinv
