#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "vertinv/ode.hpp"
#include "helpers.hpp"

using namespace vertinv;
using Catch::Matchers::WithinAbs;

namespace {

CurveState random_state(std::mt19937_64& gen, double range) {
    return {testutil::uniform(gen, -range, range), testutil::uniform(gen, -range, range),
            testutil::uniform(gen, -std::numbers::pi, std::numbers::pi)};
}

OdeProblem minimal_problem(Ambient ambient, CurveState ic, double t0, double t1,
                           double step) {
    OdeProblem p;
    p.ambient = ambient;
    p.target = Target::mean(0.0);
    p.initial = ic;
    p.t0 = t0;
    p.t1 = t1;
    p.step = step;
    return p;
}

}  // namespace

TEST_CASE("specialized minimal slopes match the general solve") {
    std::mt19937_64 gen(31);
    const Ambient ambients[] = {Ambient::sol3(1.0),    Ambient::sol3(1.5),
                                Ambient::sol3(3.0),    Ambient::nil3(),
                                Ambient::e2tilde(1.0), Ambient::e2tilde(2.0),
                                Ambient::euclid()};
    for (const Ambient& ambient : ambients)
        for (int i = 0; i < 300; ++i) {
            CurveState s = random_state(gen, 5.0);
            CHECK_THAT(minimal_theta_prime(ambient, s),
                       WithinAbs(theta_prime_for_H(ambient, s, 0.0), 1e-12));
        }
}

TEST_CASE("flat-chart minimal slope reduces to the compact quotient") {
    std::mt19937_64 gen(32);
    Ambient e2 = Ambient::e2tilde(1.0);
    for (int i = 0; i < 300; ++i) {
        CurveState s = random_state(gen, 5.0);
        double want = (s.x * std::sin(s.theta) - s.y * std::cos(s.theta)) /
                      (1.0 + s.x * s.x + s.y * s.y);
        CHECK(minimal_theta_prime(e2, s) == want);
    }
}

TEST_CASE("zero-Gauss slope and its guard band") {
    CurveState s{1.0, 2.0, 0.3};
    double denom = 2.0 * std::cos(0.3) - std::sin(0.3);
    CHECK(zero_gauss_theta_prime(s, 1e-8, 0.0) == -1.0 / denom);

    CurveState bad{1.0, 0.0, 0.0};  // tangent line through the origin
    CHECK_THROWS_AS(zero_gauss_theta_prime(bad, 1e-8, 3.5), singularity_error);
    try {
        zero_gauss_theta_prime(bad, 1e-8, 3.5);
    } catch (const singularity_error& e) {
        CHECK(e.t() == 3.5);
        CHECK(e.state().x == 1.0);
    }
}

TEST_CASE("grid node count") {
    CHECK(detail::grid_count(1.0, 0.1) == 10);
    CHECK(detail::grid_count(0.95, 0.1) == 9);
    CHECK(detail::grid_count(10.0, 1e-3) == 10000);
    CHECK(detail::grid_count(0.0, 1e-3) == 0);
    CHECK(detail::grid_count(250.0, 1e-3) == 250000);
}

TEST_CASE("integration argument checks") {
    OdeProblem p = minimal_problem(Ambient::euclid(), {0, 0, 0}, 0.0, 1.0, 0.1);
    p.step = -0.1;
    CHECK_THROWS_AS(integrate(p), std::invalid_argument);
    p.step = 0.0;
    CHECK_THROWS_AS(integrate(p), std::invalid_argument);

    p = minimal_problem(Ambient::euclid(), {0, 0, 0}, 1.0, 2.0, 0.1);
    CHECK_THROWS_AS(integrate(p), std::invalid_argument);  // span misses 0

    p = minimal_problem(Ambient::nil3(), {0, 0, 0}, 0.0, 1.0, 0.1);
    p.target = Target::zero_gauss();
    CHECK_THROWS_AS(integrate(p), std::invalid_argument);
    p.ambient = Ambient::e2tilde(2.0);
    CHECK_THROWS_AS(integrate(p), std::invalid_argument);
}

TEST_CASE("straight lines in the abelian ambient") {
    OdeProblem p = minimal_problem(Ambient::euclid(), {1.0, 2.0, 0.3}, -1.0, 2.0, 0.1);
    Trajectory traj = integrate(p);
    REQUIRE(traj.samples.size() == 31);

    const TrajectorySample& anchor = traj.samples[10];
    CHECK(anchor.t == 0.0);
    CHECK(anchor.state.x == 1.0);  // the initial state is emitted, not recomputed
    CHECK(anchor.state.y == 2.0);
    CHECK(anchor.state.theta == 0.3);

    for (const auto& smp : traj.samples) {
        CHECK_THAT(smp.state.x, WithinAbs(1.0 + smp.t * std::cos(0.3), 1e-13));
        CHECK_THAT(smp.state.y, WithinAbs(2.0 + smp.t * std::sin(0.3), 1e-13));
        CHECK(smp.state.theta == 0.3);
        CHECK(smp.kappa == 0.0);
    }
    for (std::size_t i = 1; i < traj.samples.size(); ++i)
        CHECK(traj.samples[i].t > traj.samples[i - 1].t);
}

TEST_CASE("reversed spans emit descending samples") {
    OdeProblem p = minimal_problem(Ambient::euclid(), {0, 0, 0}, 1.0, -1.0, 0.25);
    Trajectory traj = integrate(p);
    REQUIRE(traj.samples.size() == 9);
    CHECK(traj.samples.front().t == 1.0);
    CHECK(traj.samples.back().t == -1.0);
}

TEST_CASE("constant curvature circles close up") {
    // step divides the period exactly so the last node lands on t = 2 pi
    double period = 2.0 * std::numbers::pi;
    OdeProblem p =
        minimal_problem(Ambient::euclid(), {0, 0, 0}, 0.0, period, period / 4000.0);
    p.target = Target::mean(0.5);  // theta' = -2H in the abelian ambient
    Trajectory traj = integrate(p);
    REQUIRE(traj.samples.size() == 4001);
    const CurveState& end = traj.samples.back().state;
    CHECK_THAT(end.x, WithinAbs(0.0, 1e-10));
    CHECK_THAT(end.y, WithinAbs(0.0, 1e-10));
    CHECK_THAT(end.theta, WithinAbs(-period, 1e-10));
}

TEST_CASE("fourth-order convergence against a refined reference") {
    CurveState ic{1.0, 0.0, std::numbers::pi / 2.0};
    auto final_state = [&](double step) {
        Trajectory t =
            integrate(minimal_problem(Ambient::e2tilde(1.0), ic, 0.0, 10.0, step));
        return t.samples.back().state;
    };
    CurveState ref = final_state(0.05 / 16.0);
    auto err = [&](const CurveState& s) {
        return std::max({std::abs(s.x - ref.x), std::abs(s.y - ref.y),
                         std::abs(s.theta - ref.theta)});
    };
    double coarse = err(final_state(0.05));
    double fine = err(final_state(0.025));
    double ratio = coarse / fine;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("flat-chart runs are rotation equivariant") {
    double phi = 0.7;
    CurveState ic{1.0, 0.0, std::numbers::pi / 2.0};
    CurveState turned{std::cos(phi), std::sin(phi), std::numbers::pi / 2.0 + phi};

    Trajectory base =
        integrate(minimal_problem(Ambient::e2tilde(1.0), ic, 0.0, 50.0, 1e-3));
    Trajectory spun =
        integrate(minimal_problem(Ambient::e2tilde(1.0), turned, 0.0, 50.0, 1e-3));
    REQUIRE(base.samples.size() == spun.samples.size());

    double worst = 0.0;
    for (std::size_t i = 0; i < base.samples.size(); ++i) {
        const CurveState& b = base.samples[i].state;
        const CurveState& s = spun.samples[i].state;
        double rx = b.x * std::cos(phi) - b.y * std::sin(phi);
        double ry = b.x * std::sin(phi) + b.y * std::cos(phi);
        worst = std::max({worst, std::abs(s.x - rx), std::abs(s.y - ry),
                          std::abs(s.theta - (b.theta + phi))});
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("nil3 minimal runs keep the tangent angle in its quadrant") {
    OdeProblem p = minimal_problem(Ambient::nil3(), {0.0, 0.0, std::numbers::pi / 4.0},
                                   -10.0, 10.0, 1e-3);
    Trajectory traj = integrate(p);
    for (const auto& smp : traj.samples) {
        CHECK(smp.state.theta > 0.0);
        CHECK(smp.state.theta < std::numbers::pi / 2.0);
    }
}

TEST_CASE("zero-Gauss integration hits the guard on a through-origin start") {
    OdeProblem p;
    p.ambient = Ambient::e2tilde(1.0);
    p.target = Target::zero_gauss();
    p.initial = {1.0, 0.0, 0.0};
    p.t0 = 0.0;
    p.t1 = 1.0;
    CHECK_THROWS_AS(integrate(p), singularity_error);
}
