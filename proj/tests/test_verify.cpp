#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "vertinv/verify.hpp"

using namespace vertinv;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

Trajectory run_minimal(Ambient ambient, CurveState ic, double t0, double t1,
                       double step = 1e-3) {
    OdeProblem p;
    p.ambient = ambient;
    p.target = Target::mean(0.0);
    p.initial = ic;
    p.t0 = t0;
    p.t1 = t1;
    p.step = step;
    return integrate(p);
}

Trajectory run_zero_gauss(CurveState ic, double t0, double t1, double step = 1e-3) {
    OdeProblem p;
    p.ambient = Ambient::e2tilde(1.0);
    p.target = Target::zero_gauss();
    p.initial = ic;
    p.t0 = t0;
    p.t1 = t1;
    p.step = step;
    return integrate(p);
}

const CurveState kApexStart{1.0, 0.0, std::numbers::pi / 2.0};

}  // namespace

TEST_CASE("support function") {
    CHECK(support_function({1.0, 0.0, std::numbers::pi / 2.0}) == -1.0);
    CHECK_THAT(support_function({0.0, 2.0, 0.0}), WithinAbs(2.0, 1e-16));
}

TEST_CASE("curvature bound holds on flat-chart minimal runs") {
    Trajectory traj = run_minimal(Ambient::e2tilde(1.0), kApexStart, -5.0, 5.0);
    VerifyReport r = curvature_bound(traj);
    CHECK(r.pass);
    CHECK_THAT(r.measured, WithinAbs(0.5, 1e-9));
    CHECK(r.tolerance == 0.5 + 1e-12);
    CHECK_THAT(r.detail, ContainsSubstring("pointwise"));

    Trajectory wide = run_minimal(Ambient::e2tilde(2.0), {1.0, 0.0, 1.0}, -5.0, 5.0);
    VerifyReport rw = curvature_bound(wide);
    CHECK(rw.pass);
    CHECK(rw.tolerance == 1.0 + 1e-12);

    CHECK_THROWS_AS(curvature_bound(run_minimal(Ambient::euclid(), {0, 0, 0}, 0, 1)),
                    std::invalid_argument);
}

TEST_CASE("curvature ODE residual is small at this step size") {
    Trajectory traj = run_minimal(Ambient::e2tilde(1.0), kApexStart, -5.0, 5.0);
    VerifyReport r = kappa_ode_residual(traj, 1e-5);
    CHECK(r.pass);
    CHECK(r.measured < 1e-5);
    CHECK_FALSE(r.witness.has_value());

    // only defined in the flat chart
    Trajectory wide = run_minimal(Ambient::e2tilde(2.0), {1.0, 0.0, 1.0}, -1.0, 1.0);
    CHECK_THROWS_AS(kappa_ode_residual(wide, 1e-5), std::invalid_argument);

    Trajectory stub;
    stub.problem.ambient = Ambient::e2tilde(1.0);
    stub.problem.target = Target::mean(0.0);
    stub.samples = {{0.0, {1, 0, 0}, 0.0}, {1.0, {2, 0, 0}, 0.0}};
    CHECK_THROWS_AS(kappa_ode_residual(stub, 1e-5), std::invalid_argument);
}

TEST_CASE("line/loop classification") {
    Trajectory through_origin =
        run_minimal(Ambient::e2tilde(1.0), {0.0, 0.0, 0.7}, -1.0, 1.0);
    CHECK(classify_type(through_origin, 1e-9) == CurveType::TypeI);

    // collinear start away from the origin
    double phi = 0.4;
    Trajectory radial = run_minimal(
        Ambient::e2tilde(1.0), {2.0 * std::cos(phi), 2.0 * std::sin(phi), phi}, -1.0, 1.0);
    CHECK(classify_type(radial, 1e-9) == CurveType::TypeI);

    Trajectory loop = run_minimal(Ambient::e2tilde(1.0), kApexStart, -1.0, 1.0);
    CHECK(classify_type(loop, 1e-9) == CurveType::TypeII);

    CHECK_THROWS_AS(classify_type(run_minimal(Ambient::nil3(), {0, 0, 0.5}, 0, 1), 1e-9),
                    std::invalid_argument);
}

TEST_CASE("mirror symmetry of normal-form runs") {
    VerifyReport r = symmetry_check(run_minimal(Ambient::e2tilde(1.0), kApexStart, -5.0, 5.0));
    CHECK(r.pass);
    CHECK(r.measured <= 1e-8);

    VerifyReport mirrored = symmetry_check(run_minimal(
        Ambient::e2tilde(1.0), {1.0, 0.0, -std::numbers::pi / 2.0}, -5.0, 5.0));
    CHECK(mirrored.pass);

    // not in normal form: tangent not orthogonal to the position
    CHECK_THROWS_AS(
        symmetry_check(run_minimal(Ambient::e2tilde(1.0), {1.0, 0.0, 1.0}, -5.0, 5.0)),
        std::invalid_argument);
    // asymmetric span
    CHECK_THROWS_AS(
        symmetry_check(run_minimal(Ambient::e2tilde(1.0), kApexStart, -1.0, 2.0)),
        std::invalid_argument);
}

TEST_CASE("axis lines are the only constant-angle directions for c > 1") {
    VerifyReport r = constant_theta_axes_check(2.0);
    CHECK(r.pass);
    CHECK(r.measured <= 1e-12);
    CHECK_THAT(r.detail, ContainsSubstring("off-axis"));

    CHECK_THROWS_AS(constant_theta_axes_check(1.0), std::invalid_argument);

    // spot checks behind the verifier: on-axis slopes vanish identically,
    // the diagonal direction does not
    Ambient e2 = Ambient::e2tilde(2.0);
    for (double t = -5.0; t <= 5.0; t += 0.5)
        CHECK(minimal_theta_prime(e2, {t, 0.0, 0.0}) == 0.0);
    double diag = std::sqrt(0.5);
    CHECK(std::abs(minimal_theta_prime(e2, {diag, diag, std::numbers::pi / 4.0})) > 1e-2);
}

TEST_CASE("dependence on the ambient parameter is continuous") {
    VerifyReport r = continuous_dependence_check(kApexStart, -1.0, 1.0, 1e-2);
    CHECK(r.pass);
    CHECK(r.measured > 0.0);
    CHECK(r.measured < 1.0);

    // a slack tolerance admits the whole probed interval
    VerifyReport wide = continuous_dependence_check(kApexStart, -1.0, 1.0, 3.0);
    CHECK(wide.pass);
    CHECK(wide.measured == 1.0);
}

TEST_CASE("first-integral drift on conserving runs") {
    Trajectory nil = run_minimal(Ambient::nil3(), {0.0, 0.0, std::numbers::pi / 4.0},
                                 -2.0, 2.0);
    VerifyReport r = first_integral_drift(nil, 1e-8);
    CHECK(r.pass);
    CHECK_THAT(r.detail, ContainsSubstring("level 1"));

    VerifyReport zk = first_integral_drift(run_zero_gauss(kApexStart, -1.0, 1.0), 1e-8);
    CHECK(zk.pass);

    CHECK_THROWS_AS(
        first_integral_drift(run_minimal(Ambient::euclid(), {0, 0, 0}, 0, 1), 1e-8),
        std::invalid_argument);

    // a corrupted sample is caught and reported as the witness
    Trajectory broken = nil;
    broken.samples[10].state.y += 1.0;
    VerifyReport bad = first_integral_drift(broken, 1e-8);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->t == broken.samples[10].t);
}

TEST_CASE("self-intersection count check") {
    Trajectory x_shape;
    x_shape.samples = {{0.0, {-1, -1, 0}, 0.0},
                       {1.0, {1, 1, 0}, 0.0},
                       {2.0, {-1, 1, 0}, 0.0},
                       {3.0, {1, -1, 0}, 0.0}};
    VerifyReport hit = self_intersection_count(x_shape, 1);
    CHECK(hit.pass);
    CHECK(hit.measured == 1.0);
    CHECK_THAT(hit.detail, ContainsSubstring("t1="));

    VerifyReport miss = self_intersection_count(x_shape, 2);
    CHECK_FALSE(miss.pass);
}

TEST_CASE("apex sits at the anchor of the normal form") {
    Trajectory traj = run_minimal(Ambient::e2tilde(1.0), kApexStart, -5.0, 5.0);
    const TrajectorySample& apex = locate_apex(traj);
    CHECK(std::abs(apex.t) <= 1e-3);
    CHECK_THAT(std::abs(apex.kappa), WithinAbs(0.5, 1e-9));

    Trajectory empty;
    CHECK_THROWS_AS(locate_apex(empty), std::invalid_argument);
}

TEST_CASE("report lines carry name, verdict, and measurements") {
    VerifyReport r;
    r.name = "curvature_bound";
    r.pass = true;
    r.measured = 0.25;
    r.tolerance = 0.5;
    std::string line = to_line(r);
    CHECK_THAT(line, ContainsSubstring("curvature_bound"));
    CHECK_THAT(line, ContainsSubstring("PASS"));
    CHECK_THAT(line, ContainsSubstring("measured=0.25"));

    r.pass = false;
    r.witness = TrajectorySample{1.5, {2.0, 3.0, 0.5}, 0.1};
    std::string fail_line = to_line(r);
    CHECK_THAT(fail_line, ContainsSubstring("FAIL"));
    CHECK_THAT(fail_line, ContainsSubstring("t=1.5"));
}
